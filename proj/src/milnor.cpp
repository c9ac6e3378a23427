#include "gslab/milnor.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "gslab/error.hpp"
#include "gslab/truncated.hpp"

namespace gslab {

namespace {

struct Tok {
    std::string text;
    int column = 0;
};

std::vector<Tok> tokens_of(std::string_view line)
{
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i >= line.size())
            break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        out.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

std::string name_part(const std::string& tok) { return tok.substr(0, tok.find('^')); }

int parse_int(const Tok& t, int line)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw ParseError(ErrorKind::Syntax, "expected an integer, found '" + t.text + "'", line, t.column);
    return v;
}

Word word_of(const std::vector<Tok>& toks, std::size_t first, std::size_t last, const Presentation& p, int line)
{
    std::string joined;
    std::vector<int> cols;
    for (std::size_t i = first; i < last; ++i) {
        joined += toks[i].text + " ";
        cols.push_back(toks[i].column);
    }
    try {
        return parse_word(joined, p);
    } catch (const ParseError& e) {
        // Map the column inside the joined text back to the source line.
        int col = 0;
        int pos = 1;
        for (std::size_t i = first; i < last; ++i) {
            const int len = static_cast<int>(toks[i].text.size());
            if (e.column() >= pos && e.column() <= pos + len) {
                col = toks[i].column + (e.column() - pos);
                break;
            }
            pos += len + 1;
        }
        throw ParseError(e.kind(), e.message(), line, col);
    }
}

}  // namespace

std::vector<int> LinkData::components() const
{
    std::vector<int> comp(static_cast<std::size_t>(presentation.rank()), -1);
    for (int j = 0; j < m; ++j)
        comp[static_cast<std::size_t>(meridians[static_cast<std::size_t>(j)])] = j;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : conjugation_table)
            if (comp[static_cast<std::size_t>(r.generator)] < 0 && comp[static_cast<std::size_t>(r.base)] >= 0) {
                comp[static_cast<std::size_t>(r.generator)] = comp[static_cast<std::size_t>(r.base)];
                changed = true;
            }
    }
    return comp;
}

LinkData LinkData::from_longitudes(std::vector<Word> longitudes_in_meridians)
{
    LinkData l;
    l.m = static_cast<int>(longitudes_in_meridians.size());
    l.presentation = Presentation::free_group(l.m);
    for (int j = 0; j < l.m; ++j)
        l.meridians.push_back(j);
    l.longitudes = std::move(longitudes_in_meridians);
    return l;
}

LinkData parse_link(std::string_view text, std::string_view source_name)
{
    const std::string src(source_name);
    try {
        std::vector<std::vector<Tok>> lines;
        {
            std::size_t start = 0;
            while (start <= text.size()) {
                auto end = text.find('\n', start);
                std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                                         : end - start);
                if (auto h = line.find('#'); h != std::string_view::npos)
                    line = line.substr(0, h);
                lines.push_back(tokens_of(line));
                if (end == std::string_view::npos)
                    break;
                start = end + 1;
            }
        }

        // Pass 1: generator names.
        Presentation p;
        p.name = src;
        bool explicit_gens = false;
        auto declare = [&](const std::string& name, int line, int col) {
            if (p.index_of(name))
                return;
            if (explicit_gens)
                throw ParseError(ErrorKind::UnknownGenerator, "unknown generator '" + name + "'", line, col);
            p.generators.push_back(name);
        };
        for (std::size_t ln = 0; ln < lines.size(); ++ln) {
            const auto& t = lines[ln];
            if (!t.empty() && t[0].text == "gens") {
                if (explicit_gens)
                    throw ParseError(ErrorKind::Syntax, "second 'gens' line", static_cast<int>(ln) + 1, 1);
                explicit_gens = true;
                for (std::size_t i = 1; i < t.size(); ++i) {
                    if (p.index_of(t[i].text))
                        throw ParseError(ErrorKind::DuplicateGenerator, "duplicate generator '" + t[i].text + "'",
                                         static_cast<int>(ln) + 1, t[i].column);
                    p.generators.push_back(t[i].text);
                }
            }
        }
        for (std::size_t ln = 0; ln < lines.size(); ++ln) {
            const auto& t = lines[ln];
            const int line = static_cast<int>(ln) + 1;
            if (t.empty())
                continue;
            const std::string& head = t[0].text;
            if (head == "meridian" && t.size() == 3)
                declare(t[2].text, line, t[2].column);
            else if (head == "conj")
                for (std::size_t i = 1; i < t.size(); ++i)
                    if (t[i].text != "=" && t[i].text != "|" && t[i].text != "base" && t[i].text != "1")
                        declare(name_part(t[i].text), line, t[i].column);
            if (head == "longitude" || head == "rel")
                for (std::size_t i = (head == "rel" ? 1 : 2); i < t.size(); ++i)
                    if (t[i].text != "1")
                        declare(name_part(t[i].text), line, t[i].column);
        }

        // Pass 2: structure.
        LinkData l;
        std::vector<std::optional<int>> meridian;
        std::vector<std::optional<Word>> longitude;
        std::vector<int> longitude_line;
        std::set<int> conj_defined;
        bool have_components = false;
        for (std::size_t ln = 0; ln < lines.size(); ++ln) {
            const auto& t = lines[ln];
            const int line = static_cast<int>(ln) + 1;
            if (t.empty())
                continue;
            const std::string& head = t[0].text;
            if (head == "components") {
                if (have_components || t.size() != 2)
                    throw ParseError(ErrorKind::Syntax, "expected a single 'components m' line", line, 1);
                l.m = parse_int(t[1], line);
                if (l.m < 1)
                    throw ParseError(ErrorKind::Syntax, "component count must be positive", line, t[1].column);
                have_components = true;
                meridian.assign(static_cast<std::size_t>(l.m), std::nullopt);
                longitude.assign(static_cast<std::size_t>(l.m), std::nullopt);
                longitude_line.assign(static_cast<std::size_t>(l.m), 0);
                continue;
            }
            if (head == "gens")
                continue;
            if (head == "rel") {
                p.relators.push_back(word_of(t, 1, t.size(), p, line));
                continue;
            }
            if ((head == "meridian" || head == "longitude") && !have_components)
                throw ParseError(ErrorKind::Syntax, "'" + head + "' before 'components'", line, 1);
            if (head == "meridian") {
                if (t.size() != 3)
                    throw ParseError(ErrorKind::Syntax, "expected 'meridian j generator'", line, 1);
                const int j = parse_int(t[1], line);
                if (j < 1 || j > l.m)
                    throw ParseError(ErrorKind::Syntax, "component index out of range", line, t[1].column);
                if (meridian[static_cast<std::size_t>(j) - 1])
                    throw ParseError(ErrorKind::DuplicateAssignment, "second meridian for component " +
                                                                         std::to_string(j), line, 1);
                const int g = *p.index_of(t[2].text);
                for (const auto& other : meridian)
                    if (other && *other == g)
                        throw ParseError(ErrorKind::DuplicateAssignment,
                                         "generator '" + t[2].text + "' is already a meridian", line, t[2].column);
                meridian[static_cast<std::size_t>(j) - 1] = g;
            } else if (head == "longitude") {
                if (t.size() < 2)
                    throw ParseError(ErrorKind::Syntax, "expected 'longitude j word'", line, 1);
                const int j = parse_int(t[1], line);
                if (j < 1 || j > l.m)
                    throw ParseError(ErrorKind::Syntax, "component index out of range", line, t[1].column);
                if (longitude[static_cast<std::size_t>(j) - 1])
                    throw ParseError(ErrorKind::DuplicateAssignment,
                                     "second longitude for component " + std::to_string(j), line, 1);
                longitude[static_cast<std::size_t>(j) - 1] = word_of(t, 2, t.size(), p, line);
                longitude_line[static_cast<std::size_t>(j) - 1] = line;
            } else if (head == "conj") {
                // conj y = w ... | base g
                std::size_t bar = 0;
                for (std::size_t i = 0; i < t.size(); ++i)
                    if (t[i].text == "|")
                        bar = i;
                if (t.size() < 3 || t[2].text != "=" || bar == 0 || bar + 3 != t.size() || t[bar + 1].text != "base")
                    throw ParseError(ErrorKind::Syntax, "expected 'conj y = w ... | base g'", line, 1);
                ConjugationRule r;
                r.generator = *p.index_of(t[1].text);
                r.conjugator = word_of(t, 3, bar, p, line);
                r.base = *p.index_of(t[bar + 2].text);
                if (!conj_defined.insert(r.generator).second)
                    throw ParseError(ErrorKind::DuplicateAssignment, "second conj line for '" + t[1].text + "'",
                                     line, t[1].column);
                l.conjugation_table.push_back(std::move(r));
            } else {
                throw ParseError(ErrorKind::UnknownToken, "unknown directive '" + head + "'", line, t[0].column);
            }
        }
        if (!have_components)
            throw ParseError(ErrorKind::Syntax, "missing 'components' line", 0, 0);
        for (int j = 0; j < l.m; ++j) {
            if (!meridian[static_cast<std::size_t>(j)])
                throw ParseError(ErrorKind::MissingAssignment, "no meridian for component " + std::to_string(j + 1),
                                 0, 0);
            if (!longitude[static_cast<std::size_t>(j)])
                throw ParseError(ErrorKind::MissingAssignment, "no longitude for component " + std::to_string(j + 1),
                                 0, 0);
            l.meridians.push_back(*meridian[static_cast<std::size_t>(j)]);
            l.longitudes.push_back(*longitude[static_cast<std::size_t>(j)]);
        }
        for (const auto& r : l.conjugation_table)
            for (int g : l.meridians)
                if (r.generator == g)
                    throw ParseError(ErrorKind::DuplicateAssignment,
                                     "meridian '" + p.generators[static_cast<std::size_t>(g)] + "' has a conj line",
                                     0, 0);
        l.presentation = std::move(p);

        // Framing: longitude j has zero exponent sum over component j's generators.
        const auto comp = l.components();
        for (int j = 0; j < l.m; ++j) {
            std::int64_t sum = 0;
            for (const auto& letter : l.longitudes[static_cast<std::size_t>(j)].letters())
                if (comp[static_cast<std::size_t>(letter.gen)] == j)
                    sum += letter.exponent;
            if (sum != 0)
                throw ParseError(ErrorKind::InvalidArgument,
                                 "longitude " + std::to_string(j + 1) + " has exponent sum " + std::to_string(sum) +
                                     " in its own meridian class (framing must be zero)",
                                 longitude_line[static_cast<std::size_t>(j)], 1);
        }
        return l;
    } catch (const ParseError& e) {
        if (!src.empty() && e.source().empty())
            e.rethrow_with_source(src);
        throw;
    }
}

std::vector<Word> wirtinger_rewrite(const LinkData& l, int q)
{
    if (q < 1)
        throw Error(ErrorKind::InvalidArgument, "rewrite depth must be >= 1");
    if (q > 12)
        throw Error(ErrorKind::DegreeOverflow, "rewrite depth " + std::to_string(q) + " exceeds 12");
    const int n = l.presentation.rank();
    const auto comp = l.components();
    std::vector<const ConjugationRule*> rule(static_cast<std::size_t>(n), nullptr);
    for (const auto& r : l.conjugation_table)
        rule[static_cast<std::size_t>(r.generator)] = &r;
    std::vector<bool> is_meridian(static_cast<std::size_t>(n), false);
    for (int g : l.meridians)
        is_meridian[static_cast<std::size_t>(g)] = true;
    for (int g = 0; g < n; ++g)
        if (comp[static_cast<std::size_t>(g)] < 0 || (!is_meridian[static_cast<std::size_t>(g)] && !rule[static_cast<std::size_t>(g)]))
            throw Error(ErrorKind::IncompleteConjugationTable,
                        "generator '" + l.presentation.generators[static_cast<std::size_t>(g)] +
                            "' is neither a meridian nor expressed by a conj line");

    // Rules in base-before-generator order, so a round can use the already updated
    // base; otherwise chained bases would lag one degree behind per link.
    std::vector<int> order;
    std::vector<bool> placed(is_meridian);
    for (bool changed = true; changed;) {
        changed = false;
        for (int g = 0; g < n; ++g) {
            const ConjugationRule* r = rule[static_cast<std::size_t>(g)];
            if (!placed[static_cast<std::size_t>(g)] && r && placed[static_cast<std::size_t>(r->base)]) {
                placed[static_cast<std::size_t>(g)] = true;
                order.push_back(g);
                changed = true;
            }
        }
    }

    std::vector<Word> e(static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g)
        e[static_cast<std::size_t>(g)] = Word::generator(comp[static_cast<std::size_t>(g)]);
    auto substitute = [&](const Word& w, const std::vector<Word>& table) {
        Word out;
        for (const auto& letter : w.letters())
            out = out * power(table[static_cast<std::size_t>(letter.gen)], letter.exponent);
        return free_reduce(out);
    };
    // E_1 is the component map; E_t is correct modulo the (t+1)-st term.
    for (int round = 1; round < q; ++round) {
        std::vector<Word> next = e;
        for (int g : order) {
            const ConjugationRule* r = rule[static_cast<std::size_t>(g)];
            const Word w = substitute(r->conjugator, e);
            next[static_cast<std::size_t>(g)] = free_reduce(w * next[static_cast<std::size_t>(r->base)] * w.inverse());
        }
        e = std::move(next);
    }
    std::vector<Word> out;
    for (const auto& lam : l.longitudes)
        out.push_back(substitute(lam, e));
    return out;
}

namespace {

Integer magnus_coefficient(const Word& w, int m, const std::vector<int>& letters)
{
    const int q = static_cast<int>(letters.size());
    const TruncatedElement t = magnus_image(w, m, std::max(q, 1));
    const Rational& c = t.coefficient(letters);
    return c.get_num();
}

void check_index(const LinkData& l, const std::vector<int>& index)
{
    if (index.size() < 2)
        throw Error(ErrorKind::InvalidArgument, "multi-index needs length >= 2");
    for (int i : index)
        if (i < 1 || i > l.m)
            throw Error(ErrorKind::InvalidArgument, "multi-index entry " + std::to_string(i) + " outside 1.." +
                                                        std::to_string(l.m));
}

// Sub-multi-indices: delete at least one entry (keep >= 2), then rotate.
std::set<std::vector<int>> reductions(const std::vector<int>& index)
{
    std::set<std::vector<int>> out;
    const int k = static_cast<int>(index.size());
    for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
        std::vector<int> kept;
        for (int i = 0; i < k; ++i)
            if (!(mask & (1u << i)))
                kept.push_back(index[static_cast<std::size_t>(i)]);
        if (kept.size() < 2)
            continue;
        for (std::size_t r = 0; r < kept.size(); ++r) {
            std::vector<int> rot(kept.begin() + static_cast<std::ptrdiff_t>(r), kept.end());
            rot.insert(rot.end(), kept.begin(), kept.begin() + static_cast<std::ptrdiff_t>(r));
            out.insert(rot);
        }
    }
    return out;
}

Integer raw_value(const std::vector<Word>& rewritten, int m, const std::vector<int>& index)
{
    std::vector<int> letters;
    for (std::size_t i = 0; i + 1 < index.size(); ++i)
        letters.push_back(index[i] - 1);
    return magnus_coefficient(rewritten[static_cast<std::size_t>(index.back()) - 1], m, letters);
}

MuBar finish(const Integer& raw, const Integer& delta)
{
    MuBar out;
    out.raw = raw;
    out.delta = delta;
    out.value = raw;
    if (delta > 0) {
        mpz_fdiv_r(out.value.get_mpz_t(), raw.get_mpz_t(), delta.get_mpz_t());
    }
    return out;
}

}  // namespace

MuBar mu_bar(const LinkData& l, const std::vector<int>& index)
{
    check_index(l, index);
    const int k = static_cast<int>(index.size());
    const auto rewritten = wirtinger_rewrite(l, k - 1);
    Integer delta = 0;
    for (const auto& j : reductions(index)) {
        const Integer v = raw_value(rewritten, l.m, j);
        mpz_gcd(delta.get_mpz_t(), delta.get_mpz_t(), v.get_mpz_t());
    }
    return finish(raw_value(rewritten, l.m, index), delta);
}

std::vector<std::vector<int>> MilnorTable::rows() const
{
    std::vector<std::vector<int>> out;
    for (const auto& [k, _] : entries)
        out.push_back(k);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

std::string format_multi_index(const std::vector<int>& index)
{
    std::string s;
    const bool wide = std::any_of(index.begin(), index.end(), [](int i) { return i > 9; });
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (wide && i > 0)
            s += ".";
        s += std::to_string(index[i]);
    }
    return s;
}

std::string MilnorTable::csv() const
{
    std::ostringstream os;
    os << "I,value,delta\n";
    for (const auto& r : rows()) {
        const MuBar& e = entries.at(r);
        os << format_multi_index(r) << "," << e.value.get_str() << "," << e.delta.get_str() << "\n";
    }
    return os.str();
}

MilnorTable mu_table(const LinkData& l, int maxlen)
{
    if (maxlen < 2)
        throw Error(ErrorKind::InvalidArgument, "maxlen must be >= 2");
    MilnorTable t;
    t.m = l.m;
    t.maxlen = maxlen;
    const auto rewritten = wirtinger_rewrite(l, maxlen - 1);
    std::map<std::vector<int>, Integer> raw;
    for (int k = 2; k <= maxlen; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k), 1);
        for (;;) {
            raw[idx] = raw_value(rewritten, l.m, idx);
            Integer delta = 0;
            for (const auto& j : reductions(idx))
                mpz_gcd(delta.get_mpz_t(), delta.get_mpz_t(), raw.at(j).get_mpz_t());
            t.entries[idx] = finish(raw[idx], delta);
            int pos = k - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == l.m)
                idx[static_cast<std::size_t>(pos--)] = 1;
            if (pos < 0)
                break;
            ++idx[static_cast<std::size_t>(pos)];
        }
    }
    return t;
}

}  // namespace gslab
