#include <random>

#include "doctest.h"
#include "gslab/freesolv.hpp"
#include "gslab/integer_matrix.hpp"

using namespace gslab;

namespace {

const Presentation kF2 = parse_presentation("gens x y");
const Presentation kMeta = parse_presentation(
    "gens x y\nrel x y x^-1 y^-1 y x y x^-1 y^-1 x y^-1 x^-1 y x y^-1 x^-1 x y x^-1 y x y^-1 x^-1 y^-1");

}  // namespace

TEST_CASE("free generators")
{
    for (int n = 1; n <= 3; ++n) {
        const FreeSolvableReport r = freesolvable_hypotheses(parse_subset("x\ny\n", kF2), n);
        CHECK(r.independent);
        CHECK(r.h2_hypothesis.holds());
        CHECK(r.hypotheses_hold);
        CHECK(r.probe.has_value() == (n == 2));
        if (r.probe)
            CHECK(r.probe->rank_preserved);
    }
}

TEST_CASE("dependent elements")
{
    const FreeSolvableReport r = freesolvable_hypotheses(parse_subset("x\nx^2\n", kF2), 2);
    CHECK_FALSE(r.independent);
    CHECK(r.h1_rank == 1);
    CHECK_FALSE(r.hypotheses_hold);
}

TEST_CASE("second derived relator")
{
    const FreeSolvableReport r = freesolvable_hypotheses(parse_subset("x\ny\n", kMeta), 2);
    CHECK(r.independent);
    REQUIRE(r.probe.has_value());
    CHECK(r.probe->rank_preserved);
    CHECK(r.h2_hypothesis.status == HypothesisStatus::Unknown);
    CHECK_FALSE(r.hypotheses_hold);
    CHECK(freesolvable_hypotheses(parse_subset("x\ny\n", kMeta), 2, true).hypotheses_hold);
}

TEST_CASE("independence matches the rank of exponent classes")
{
    const Presentation f3 = parse_presentation("gens x y z");
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> gen(0, 2), ex(-2, 2), len(1, 4), count(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        SubsetSpec s{f3, {}};
        const int k = count(rng);
        IntMatrix classes(static_cast<std::size_t>(k), 3);
        for (int i = 0; i < k; ++i) {
            std::vector<Letter> ls;
            for (int j = len(rng); j > 0; --j)
                ls.push_back({gen(rng), ex(rng)});
            const Word w(ls);
            s.elements.push_back(w);
            const auto sums = w.exponent_sums(3);
            for (std::size_t c = 0; c < 3; ++c)
                classes(static_cast<std::size_t>(i), c) = static_cast<long>(sums[c]);
        }
        const FreeSolvableReport r = freesolvable_hypotheses(s, 1);
        CHECK(r.independent == (rational_rank(classes) == static_cast<std::size_t>(k)));
        CHECK(r.h1_rank == static_cast<int>(rational_rank(classes)));
    }
}

TEST_CASE("subset parsing")
{
    const SubsetSpec s = parse_subset("# comment\nx y\n\ny^-1 x^2\n", kF2);
    CHECK(s.elements.size() == 2);
    CHECK_THROWS(parse_subset("x q\n", kF2));
    const GroupHom h = subset_hom(s);
    CHECK(h.source.rank() == 2);
    CHECK(h.images[1] == Word({{1, -1}, {0, 2}}));
}
