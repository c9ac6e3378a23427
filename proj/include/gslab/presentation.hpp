#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gslab {

// A syllable x_gen^exponent of a free-group word.
struct Letter {
    int gen = 0;
    std::int64_t exponent = 0;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Free-group word in run-length form. Not necessarily reduced; use free_reduce.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    static Word generator(int gen, std::int64_t exponent = 1);
    // x^-1 y^-1 x y
    static Word commutator(const Word& x, const Word& y);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    bool empty() const noexcept { return letters_.empty(); }
    // Number of syllables.
    std::size_t size() const noexcept { return letters_.size(); }
    // Sum of |exponent| over syllables.
    std::int64_t length() const;

    Word inverse() const;
    // Exponent sum of each generator, for a free group of the given rank.
    std::vector<std::int64_t> exponent_sums(int rank) const;
    int max_generator() const;

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

// Fully freely reduced form: merged adjacent syllables, no zero exponents.
Word free_reduce(const Word& w);

Word power(const Word& w, std::int64_t k);

struct Presentation {
    std::string name;
    std::vector<std::string> generators;
    std::vector<Word> relators;  // stored reduced
    bool aspherical = false;     // user-asserted, never inferred

    int rank() const { return static_cast<int>(generators.size()); }
    std::optional<int> index_of(std::string_view gen) const;

    static Presentation free_group(int rank, std::string name = {});

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Generator-image map. Well-definedness is not an invariant; see hom_welldefined_upto.
struct GroupHom {
    Presentation source;
    Presentation target;
    std::vector<Word> images;

    static GroupHom identity(const Presentation& p);
    // Image of a source word, reduced.
    Word apply(const Word& w) const;
    bool is_identity() const;
};

// (g o f)(x) = g(f(x)); requires f.target == g.source.
GroupHom compose(const GroupHom& g, const GroupHom& f);

Presentation parse_presentation(std::string_view text, std::string_view source_name = {});
GroupHom parse_hom(std::string_view text, const Presentation& src, const Presentation& tgt,
                   std::string_view source_name = {});

// Whitespace-separated tokens `g`, `g^-1`, `g^k`; `1` is the empty word.
Word parse_word(std::string_view text, const Presentation& p);

std::string format_word(const Word& w, const std::vector<std::string>& names);
std::string format_presentation(const Presentation& p);

// Certified when every source relator maps into the target's relator ideal
// modulo augmentation degree q+1.
struct WellDefinedVerdict {
    bool certified = false;
    int degree = 0;
    std::optional<int> failing_relator;
};

WellDefinedVerdict hom_welldefined_upto(const GroupHom& h, int q);

}  // namespace gslab
