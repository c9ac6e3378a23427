#include "doctest.h"
#include "gslab/error.hpp"
#include "gslab/milnor.hpp"
#include "gslab/truncated.hpp"

using namespace gslab;

namespace {

const char* kHopf = "components 2\nmeridian 1 a\nmeridian 2 b\nlongitude 1 b\nlongitude 2 a\n";
const char* kHopfWirtinger =
    "components 2\nmeridian 1 a1\nmeridian 2 b1\nconj a2 = b1 | base a1\nconj b2 = a1 | base b1\n"
    "longitude 1 b2\nlongitude 2 a2\n";
const char* kBorromean = "components 3\nmeridian 1 x1\nmeridian 2 x2\nmeridian 3 x3\n"
                         "longitude 1 x2 x3 x2^-1 x3^-1\nlongitude 2 x3 x1 x3^-1 x1^-1\n"
                         "longitude 3 x1 x2 x1^-1 x2^-1\n";
const char* kUnlink = "components 2\nmeridian 1 x1\nmeridian 2 x2\nlongitude 1\nlongitude 2\n";
// Commutator longitudes with linking number zero.
const char* kWhitehead = "components 2\nmeridian 1 x\nmeridian 2 y\n"
                         "longitude 1 x y x^-1 y^-1 x^-1 y^-1 x y\n"
                         "longitude 2 y x y^-1 x^-1 y^-1 x^-1 y x\n";

// Conjugation rules whose bases are themselves conjugates. Not data of a real
// link (linking numbers are asymmetric); used only for depth stability.
const char* kChained = "components 2\nmeridian 1 a1\nmeridian 2 b1\nconj a2 = b1 | base a1\n"
                       "conj a3 = b1 a1 | base a2\nconj b2 = a3 | base b1\nconj b3 = a2 b2 | base b2\n"
                       "longitude 1 b3 b1^-1 b2\nlongitude 2 a3 a1^-1 a2^-1 a3\n";

std::vector<const char*> corpus() { return {kHopf, kHopfWirtinger, kBorromean, kUnlink, kWhitehead}; }

}  // namespace

TEST_CASE("wirtinger rewrite")
{
    const LinkData hopf = parse_link(kHopf);
    const auto r = wirtinger_rewrite(hopf, 3);
    CHECK(r[0] == Word::generator(1));
    CHECK(r[1] == Word::generator(0));

    const LinkData w = parse_link(kHopfWirtinger);
    const auto one = wirtinger_rewrite(w, 1);
    CHECK(one[0] == Word::generator(1));
    CHECK(one[1] == Word::generator(0));
    // One more round conjugates: b2 -> x1 x2 x1^-1.
    const auto two = wirtinger_rewrite(w, 2);
    CHECK(two[0] == Word({{0, 1}, {1, 1}, {0, -1}}));

    const LinkData b = parse_link(kBorromean);
    const auto rb = wirtinger_rewrite(b, 4);
    for (int j = 0; j < 3; ++j)
        CHECK(rb[static_cast<std::size_t>(j)] == free_reduce(b.longitudes[static_cast<std::size_t>(j)]));
}

TEST_CASE("link parse errors")
{
    CHECK_THROWS_AS(parse_link("components 2\nmeridian 1 a\nmeridian 2 a\nlongitude 1\nlongitude 2\n"), Error);
    // Framing: longitude 1 may not wind around its own meridian.
    CHECK_THROWS_AS(parse_link("components 2\nmeridian 1 a\nmeridian 2 b\nlongitude 1 a b\nlongitude 2\n"), Error);
    CHECK_THROWS_AS(parse_link("components 2\nmeridian 1 a\nlongitude 1\n"), Error);
    try {
        parse_link("components 1\nmeridian 1 a\nfoo\n", "x.lnk");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.source() == "x.lnk");
    }
    const LinkData gap = parse_link("components 1\nmeridian 1 a\ngens a c\nlongitude 1 c\n");
    CHECK_THROWS_AS(wirtinger_rewrite(gap, 2), Error);
}

TEST_CASE("mu-bar values")
{
    const LinkData hopf = parse_link(kHopf);
    const MuBar m12 = mu_bar(hopf, {1, 2});
    CHECK(m12.value == 1);
    CHECK(m12.delta == 0);
    CHECK(mu_bar(hopf, {2, 1}).value == 1);

    const LinkData b = parse_link(kBorromean);
    const MuBar m231 = mu_bar(b, {2, 3, 1});
    CHECK(m231.value == 1);
    CHECK(m231.delta == 0);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(mu_bar(b, {i, j}).value == 0);

    // Coefficient of X_2 X_3 in 1 + (X_2 X_3 - X_3 X_2) read off directly.
    const TruncatedElement e = magnus_image(b.longitudes[0], 3, 2);
    CHECK(e.coefficient({1, 2}) == 1);
    CHECK(e.coefficient({2, 1}) == -1);

    const LinkData w = parse_link(kWhitehead);
    CHECK(mu_bar(w, {1, 2}).value == 0);
    CHECK(mu_bar(w, {2, 1}).value == 0);
}

TEST_CASE("mu-bar tables")
{
    const MilnorTable u = mu_table(parse_link(kUnlink), 4);
    CHECK(u.entries.size() == 4 + 8 + 16);
    for (const auto& [idx, v] : u.entries) {
        CHECK(v.value == 0);
        CHECK(v.delta == 0);
    }
    const MilnorTable h = mu_table(parse_link(kHopfWirtinger), 2);
    CHECK(h.entries.at({1, 2}).value == 1);
    CHECK(h.entries.at({2, 1}).value == 1);
    CHECK(h.csv().rfind("I,value,delta\n", 0) == 0);

    const MilnorTable b = mu_table(parse_link(kBorromean), 3);
    for (const auto& [idx, v] : b.entries)
        if (idx.size() == 3 && idx[0] != idx[1] && idx[1] != idx[2] && idx[0] != idx[2])
            CHECK(abs(v.value) == 1);
}

TEST_CASE("linking symmetry and reduction across the corpus")
{
    for (const char* text : corpus()) {
        const LinkData l = parse_link(text);
        const MilnorTable t = mu_table(l, 3);
        for (int i = 1; i <= l.m; ++i)
            for (int j = 1; j <= l.m; ++j)
                CHECK(t.entries.at({i, j}).value == t.entries.at({j, i}).value);
        for (const auto& [idx, v] : t.entries)
            if (v.delta > 0) {
                CHECK(v.value >= 0);
                CHECK(v.value < v.delta);
                CHECK((v.raw - v.value) % v.delta == 0);
            }
    }
}

TEST_CASE("mu-bar is stable in the rewrite depth")
{
    for (const char* text : {kHopfWirtinger, kChained}) {
        const LinkData w = parse_link(text);
        for (int q = 1; q <= 5; ++q) {
            const auto r = wirtinger_rewrite(w, q + 3);
            const auto s = wirtinger_rewrite(w, q);
            for (std::size_t j = 0; j < r.size(); ++j)
                CHECK(magnus_image(r[j], 2, q) == magnus_image(s[j], 2, q));
        }
        for (int k = 2; k <= 4; ++k)
            CHECK(mu_table(w, k).entries.at({1, 2}).value == mu_table(w, 2).entries.at({1, 2}).value);
    }
}
