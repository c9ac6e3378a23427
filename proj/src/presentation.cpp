#include "gslab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

#include "gslab/error.hpp"

namespace gslab {

Word Word::generator(int gen, std::int64_t exponent)
{
    if (exponent == 0)
        return {};
    return Word({Letter{gen, exponent}});
}

Word Word::commutator(const Word& x, const Word& y)
{
    return free_reduce(x.inverse() * y.inverse() * x * y);
}

std::int64_t Word::length() const
{
    std::int64_t n = 0;
    for (const auto& l : letters_)
        n += std::abs(l.exponent);
    return n;
}

Word Word::inverse() const
{
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.push_back({it->gen, -it->exponent});
    return Word(std::move(out));
}

std::vector<std::int64_t> Word::exponent_sums(int rank) const
{
    std::vector<std::int64_t> sums(static_cast<std::size_t>(rank), 0);
    for (const auto& l : letters_)
        sums.at(static_cast<std::size_t>(l.gen)) += l.exponent;
    return sums;
}

int Word::max_generator() const
{
    int m = -1;
    for (const auto& l : letters_)
        m = std::max(m, l.gen);
    return m;
}

Word operator*(const Word& a, const Word& b)
{
    std::vector<Letter> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
}

Word free_reduce(const Word& w)
{
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (const auto& l : w.letters()) {
        if (l.exponent == 0)
            continue;
        if (!stack.empty() && stack.back().gen == l.gen) {
            stack.back().exponent += l.exponent;
            if (stack.back().exponent == 0)
                stack.pop_back();
        } else {
            stack.push_back(l);
        }
    }
    return Word(std::move(stack));
}

Word power(const Word& w, std::int64_t k)
{
    Word base = k < 0 ? w.inverse() : w;
    Word out;
    for (std::int64_t i = 0; i < std::abs(k); ++i)
        out = out * base;
    return free_reduce(out);
}

std::optional<int> Presentation::index_of(std::string_view gen) const
{
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == gen)
            return static_cast<int>(i);
    return std::nullopt;
}

Presentation Presentation::free_group(int rank, std::string name)
{
    Presentation p;
    p.name = name.empty() ? "F" + std::to_string(rank) : std::move(name);
    for (int i = 0; i < rank; ++i)
        p.generators.push_back("x" + std::to_string(i + 1));
    return p;
}

GroupHom GroupHom::identity(const Presentation& p)
{
    GroupHom h{p, p, {}};
    for (int i = 0; i < p.rank(); ++i)
        h.images.push_back(Word::generator(i));
    return h;
}

Word GroupHom::apply(const Word& w) const
{
    Word out;
    for (const auto& l : w.letters())
        out = out * power(images.at(static_cast<std::size_t>(l.gen)), l.exponent);
    return free_reduce(out);
}

bool GroupHom::is_identity() const
{
    if (!(source == target))
        return false;
    for (int i = 0; i < source.rank(); ++i)
        if (!(images[static_cast<std::size_t>(i)] == Word::generator(i)))
            return false;
    return true;
}

GroupHom compose(const GroupHom& g, const GroupHom& f)
{
    if (!(f.target == g.source))
        throw Error(ErrorKind::InvalidArgument, "compose: target of f differs from source of g");
    GroupHom h{f.source, g.target, {}};
    for (const auto& w : f.images)
        h.images.push_back(g.apply(w));
    return h;
}

namespace {

struct Token {
    std::string_view text;
    int column = 0;
};

std::vector<Token> split_tokens(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i >= line.size())
            break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

std::string_view strip_comment(std::string_view line)
{
    auto pos = line.find('#');
    if (pos != std::string_view::npos)
        line = line.substr(0, pos);
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
    return line;
}

bool valid_name(std::string_view s)
{
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
        return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

// Parses one syllable token against a generator list.
Letter parse_letter(const Token& tok, const std::vector<std::string>& gens, int line)
{
    std::string_view s = tok.text;
    std::string_view name = s;
    std::int64_t exponent = 1;
    if (auto caret = s.find('^'); caret != std::string_view::npos) {
        name = s.substr(0, caret);
        std::string_view ex = s.substr(caret + 1);
        auto [ptr, ec] = std::from_chars(ex.data(), ex.data() + ex.size(), exponent);
        if (ex.empty() || ec != std::errc() || ptr != ex.data() + ex.size())
            throw ParseError(ErrorKind::UnknownToken, "malformed exponent in '" + std::string(s) + "'",
                             line, tok.column + static_cast<int>(caret) + 1);
        if (exponent == 0)
            throw ParseError(ErrorKind::UnknownToken, "zero exponent in '" + std::string(s) + "'",
                             line, tok.column + static_cast<int>(caret) + 1);
    }
    if (!valid_name(name))
        throw ParseError(ErrorKind::UnknownToken, "unknown token '" + std::string(s) + "'", line,
                         tok.column);
    auto it = std::find(gens.begin(), gens.end(), name);
    if (it == gens.end())
        throw ParseError(ErrorKind::UnknownGenerator, "unknown generator '" + std::string(name) + "'",
                         line, tok.column);
    return {static_cast<int>(it - gens.begin()), exponent};
}

Word parse_tokens(const std::vector<Token>& toks, std::size_t first, std::size_t last,
                  const std::vector<std::string>& gens, int line)
{
    std::vector<Letter> letters;
    for (std::size_t i = first; i < last; ++i) {
        if (toks[i].text == "1")
            continue;
        letters.push_back(parse_letter(toks[i], gens, line));
    }
    return free_reduce(Word(std::move(letters)));
}

}  // namespace

Presentation parse_presentation(std::string_view text, std::string_view source_name)
{
    try {
        Presentation p;
        p.name = std::string(source_name);
        bool have_gens = false;
        auto lines = split_lines(text);
        for (std::size_t ln = 0; ln < lines.size(); ++ln) {
            const int line_no = static_cast<int>(ln) + 1;
            auto toks = split_tokens(strip_comment(lines[ln]));
            if (toks.empty())
                continue;
            const auto head = toks[0].text;
            if (head == "gens") {
                if (have_gens)
                    throw ParseError(ErrorKind::Syntax, "second 'gens' line", line_no, toks[0].column);
                have_gens = true;
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    if (!valid_name(toks[i].text))
                        throw ParseError(ErrorKind::UnknownToken,
                                         "invalid generator name '" + std::string(toks[i].text) + "'",
                                         line_no, toks[i].column);
                    if (p.index_of(toks[i].text))
                        throw ParseError(ErrorKind::DuplicateGenerator,
                                         "duplicate generator '" + std::string(toks[i].text) + "'",
                                         line_no, toks[i].column);
                    p.generators.emplace_back(toks[i].text);
                }
            } else if (head == "rel") {
                if (!have_gens)
                    throw ParseError(ErrorKind::Syntax, "'rel' before 'gens'", line_no, toks[0].column);
                p.relators.push_back(parse_tokens(toks, 1, toks.size(), p.generators, line_no));
            } else if (head == "flag") {
                if (toks.size() != 2 || toks[1].text != "aspherical")
                    throw ParseError(ErrorKind::UnknownToken, "unknown flag", line_no,
                                     toks.size() > 1 ? toks[1].column : toks[0].column);
                p.aspherical = true;
            } else if (head == "name") {
                if (toks.size() != 2)
                    throw ParseError(ErrorKind::Syntax, "'name' takes one argument", line_no,
                                     toks[0].column);
                p.name = std::string(toks[1].text);
            } else {
                throw ParseError(ErrorKind::UnknownToken, "unknown directive '" + std::string(head) + "'",
                                 line_no, toks[0].column);
            }
        }
        if (!have_gens)
            throw ParseError(ErrorKind::Syntax, "missing 'gens' line", 0, 0);
        return p;
    } catch (const ParseError& e) {
        if (!source_name.empty() && e.source().empty())
            e.rethrow_with_source(std::string(source_name));
        throw;
    }
}

Word parse_word(std::string_view text, const Presentation& p)
{
    auto toks = split_tokens(strip_comment(text));
    return parse_tokens(toks, 0, toks.size(), p.generators, 1);
}

GroupHom parse_hom(std::string_view text, const Presentation& src, const Presentation& tgt,
                   std::string_view source_name)
{
    try {
        GroupHom h{src, tgt, std::vector<Word>(src.generators.size())};
        std::vector<bool> assigned(src.generators.size(), false);
        auto lines = split_lines(text);
        for (std::size_t ln = 0; ln < lines.size(); ++ln) {
            const int line_no = static_cast<int>(ln) + 1;
            std::string_view line = strip_comment(lines[ln]);
            auto toks = split_tokens(line);
            if (toks.empty())
                continue;
            const auto head = toks[0].text;
            if (head == "source" || head == "target") {
                // Paths are resolved by the caller.
                if (toks.size() != 2)
                    throw ParseError(ErrorKind::Syntax, "'" + std::string(head) + "' takes one path",
                                     line_no, toks[0].column);
                continue;
            }
            if (head != "map")
                throw ParseError(ErrorKind::UnknownToken, "unknown directive '" + std::string(head) + "'",
                                 line_no, toks[0].column);
            // Assignments separated by commas: g -> tok tok ..., h -> ...
            std::size_t offset = static_cast<std::size_t>(toks[0].column - 1) + head.size();
            std::string_view rest = line.substr(offset);
            std::size_t pos = 0;
            while (pos <= rest.size()) {
                auto comma = rest.find(',', pos);
                std::string_view piece = rest.substr(pos, comma == std::string_view::npos
                                                              ? std::string_view::npos
                                                              : comma - pos);
                const int piece_col = static_cast<int>(offset + pos) + 1;
                auto arrow = piece.find("->");
                if (arrow == std::string_view::npos)
                    throw ParseError(ErrorKind::Syntax, "expected 'g -> word'", line_no, piece_col);
                auto lhs = split_tokens(piece.substr(0, arrow));
                if (lhs.size() != 1)
                    throw ParseError(ErrorKind::Syntax, "expected a single source generator before '->'",
                                     line_no, piece_col);
                auto gen = src.index_of(lhs[0].text);
                if (!gen)
                    throw ParseError(ErrorKind::UnknownGenerator,
                                     "unknown source generator '" + std::string(lhs[0].text) + "'",
                                     line_no, piece_col + lhs[0].column - 1);
                if (assigned[static_cast<std::size_t>(*gen)])
                    throw ParseError(ErrorKind::DuplicateAssignment,
                                     "generator '" + std::string(lhs[0].text) + "' assigned twice",
                                     line_no, piece_col + lhs[0].column - 1);
                auto rhs_text = piece.substr(arrow + 2);
                auto rhs = split_tokens(rhs_text);
                for (auto& t : rhs)
                    t.column += piece_col + static_cast<int>(arrow) + 1;
                h.images[static_cast<std::size_t>(*gen)] =
                    parse_tokens(rhs, 0, rhs.size(), tgt.generators, line_no);
                assigned[static_cast<std::size_t>(*gen)] = true;
                if (comma == std::string_view::npos)
                    break;
                pos = comma + 1;
            }
        }
        for (std::size_t i = 0; i < assigned.size(); ++i)
            if (!assigned[i])
                throw ParseError(ErrorKind::MissingAssignment,
                                 "no image given for generator '" + src.generators[i] + "'", 0, 0);
        return h;
    } catch (const ParseError& e) {
        if (!source_name.empty() && e.source().empty())
            e.rethrow_with_source(std::string(source_name));
        throw;
    }
}

std::string format_word(const Word& w, const std::vector<std::string>& names)
{
    if (w.empty())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& l : w.letters()) {
        if (!first)
            out << ' ';
        first = false;
        out << names.at(static_cast<std::size_t>(l.gen));
        if (l.exponent != 1)
            out << '^' << l.exponent;
    }
    return out.str();
}

std::string format_presentation(const Presentation& p)
{
    std::ostringstream out;
    if (!p.name.empty())
        out << "name " << p.name << '\n';
    out << "gens";
    for (const auto& g : p.generators)
        out << ' ' << g;
    out << '\n';
    for (const auto& r : p.relators)
        out << "rel " << format_word(r, p.generators) << '\n';
    if (p.aspherical)
        out << "flag aspherical\n";
    return out.str();
}

}  // namespace gslab
