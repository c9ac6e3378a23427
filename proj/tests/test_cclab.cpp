#include <random>

#include "doctest.h"
#include "gslab/chain_complex.hpp"
#include "gslab/error.hpp"

using namespace gslab;

namespace {

LaurentMatrix M(std::initializer_list<std::initializer_list<const char*>> rows, int b)
{
    const std::size_t r = rows.size(), c = rows.begin()->size();
    LaurentMatrix m(r, c, b);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const char* e : row)
            m(i, j++) = parse_laurent(e, b);
        ++i;
    }
    return m;
}

// 0 -> L --(t-1)--> L -> 0
FreeComplex t_minus_one()
{
    FreeComplex c;
    c.b = 1;
    c.ranks = {1, 1};
    c.boundaries = {M({{"t - 1"}}, 1)};
    return c;
}

const Presentation kTrefoil = parse_presentation("gens a b\nrel a b a b^-1 a^-1 b^-1");

}  // namespace

TEST_CASE("complex validation")
{
    CHECK(complex_validate(FreeComplex::from_alexander(alexander_complex(kTrefoil))).valid);
    CHECK(complex_validate(t_minus_one()).valid);

    FreeComplex bad;
    bad.b = 1;
    bad.ranks = {1, 1, 1};
    bad.boundaries = {M({{"t - 1"}}, 1), M({{"t"}}, 1)};
    const ComplexCheck chk = complex_validate(bad);
    CHECK_FALSE(chk.valid);
    CHECK_FALSE(chk.failure.empty());

    FreeComplex zero;
    zero.b = 2;
    zero.ranks = {0};
    CHECK(complex_validate(zero).valid);
}

TEST_CASE("homology ranks")
{
    const FreeComplex c = t_minus_one();
    CHECK(homology_rank(c, 0) == 0);
    CHECK(homology_rank(c, 1) == 0);
    CHECK(augmented_homology_dim(c, 0) == 1);
    CHECK(augmented_homology_dim(c, 1) == 1);

    FreeComplex id;
    id.b = 1;
    id.ranks = {1, 1};
    id.boundaries = {M({{"1"}}, 1)};
    CHECK(augmented_homology_dim(id, 0) == 0);
    CHECK(augmented_homology_dim(id, 1) == 0);

    CHECK(homology_rank(FreeComplex::from_alexander(alexander_complex(parse_presentation("gens x y"))), 1) == 1);
    // Augmented d1 vanishes and augmented d2 = [1, -1]: H_1(trefoil; Q) = Q.
    CHECK(augmented_homology_dim(FreeComplex::from_alexander(alexander_complex(kTrefoil)), 1) == 1);
}

TEST_CASE("rank inequality audit")
{
    const StrebelReport r = strebel_audit(t_minus_one());
    REQUIRE(r.lines.size() == 2);
    CHECK(r.lines[0].lambda_rank == 0);
    CHECK(r.lines[0].q_dim == 1);
    CHECK(r.lines[1].lambda_rank == 0);
    CHECK_FALSE(r.falsification);

    FreeComplex z;
    z.b = 1;
    z.ranks = {1, 1};
    z.boundaries = {LaurentMatrix(1, 1, 1)};
    for (const auto& l : strebel_audit(z).lines) {
        CHECK(l.lambda_rank == 1);
        CHECK(l.q_dim == 1);
    }
}

TEST_CASE("euler characteristic")
{
    const EulerReport e = euler_characteristic_report(t_minus_one());
    CHECK(e.from_ranks == 0);
    CHECK(e.from_lambda == 0);
    CHECK(e.from_q == 0);

    FreeComplex z;
    z.b = 1;
    z.ranks = {2, 3};
    z.boundaries = {LaurentMatrix(3, 2, 1)};
    const EulerReport ez = euler_characteristic_report(z);
    CHECK(ez.from_ranks == -1);
    CHECK(ez.from_lambda == -1);
    CHECK(ez.from_q == -1);
    CHECK_FALSE(ez.falsification);
}

TEST_CASE("quotient rank bound")
{
    FreeComplex z;
    z.b = 1;
    z.ranks = {1};
    const QuotientBound kill = quotient_rank_bound(z, M({{"1"}}, 1), 0);
    CHECK(kill.original_lambda == 1);
    CHECK(kill.k_lambda == 0);
    CHECK(kill.k_lambda <= kill.k_q);
    CHECK(complex_validate(kill.extended).valid);

    const QuotientBound none = quotient_rank_bound(t_minus_one(), LaurentMatrix(0, 1, 1), 0);
    CHECK(none.k_lambda == homology_rank(t_minus_one(), 0));
    CHECK(none.k_q == augmented_homology_dim(t_minus_one(), 0));

    const FreeComplex f2 = FreeComplex::from_alexander(alexander_complex(parse_presentation("gens x y")));
    const QuotientBound zero = quotient_rank_bound(f2, LaurentMatrix(1, 2, 2), 1);
    CHECK(zero.k_lambda == zero.original_lambda);
    CHECK(zero.k_q == zero.original_q);

    CHECK_THROWS_AS(quotient_rank_bound(f2, M({{"1", "0"}}, 2), 1), Error);
}

TEST_CASE("random complexes: invariants")
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 150; ++i) {
        const FreeComplex c = random_valid_complex(rng);
        REQUIRE(complex_validate(c).valid);
        const StrebelReport s = strebel_audit(c);
        CHECK_FALSE(s.falsification);
        const EulerReport e = euler_characteristic_report(c);
        CHECK(e.from_ranks == e.from_lambda);
        CHECK(e.from_ranks == e.from_q);
        for (int p = 0; p <= c.top(); ++p) {
            const LaurentMatrix cyc = random_cycles(c, p, 2, rng);
            const QuotientBound qb = quotient_rank_bound(c, cyc, p);
            CHECK(qb.k_lambda <= qb.k_q);
            CHECK(qb.k_lambda <= qb.original_lambda);
            CHECK(complex_validate(qb.extended).valid);
        }
    }
}

TEST_CASE("fuzz summary is deterministic")
{
    const FuzzSummary a = fuzz_strebel(60, 99, 20), b = fuzz_strebel(60, 99, 20);
    CHECK(a.instances == 60);
    CHECK(a.strebel_violations == 0);
    CHECK(a.euler_violations == 0);
    CHECK(a.quotient_violations == 0);
    CHECK(a.invalid_generated == 0);
    CHECK(a.instances == b.instances);
    CHECK(a.quotient_instances == b.quotient_instances);
}

TEST_CASE("mapping cones")
{
    const FreeComplex c = t_minus_one();
    ChainMap id{c, c, {LaurentMatrix::identity(1, 1), LaurentMatrix::identity(1, 1)}};
    CHECK(chain_map_validate(id).valid);
    const FreeComplex cone = mapping_cone(id);
    CHECK(complex_validate(cone).valid);
    for (int p = 0; p <= cone.top(); ++p)
        CHECK(homology_rank(cone, p) == 0);

    FreeComplex z;
    z.b = 1;
    z.ranks = {0, 1};
    z.boundaries = {LaurentMatrix(1, 0, 1)};
    ChainMap zero{z, z, {LaurentMatrix(0, 0, 1), LaurentMatrix(1, 1, 1)}};
    const FreeComplex zc = mapping_cone(zero);
    int total = 0;
    for (int p = 0; p <= zc.top(); ++p)
        total += homology_rank(zc, p);
    CHECK(total == 2);

    ChainMap broken{c, c, {LaurentMatrix::identity(1, 1), LaurentMatrix(1, 1, 1)}};
    CHECK_FALSE(chain_map_validate(broken).valid);
}

TEST_CASE("alexander chain map of the trefoil meridian")
{
    const GroupHom h = parse_hom("map x1 -> a", Presentation::free_group(1), kTrefoil);
    const ChainMap f = alexander_chain_map(induced_alexander_map(h));
    CHECK(chain_map_validate(f).valid);
    const FreeComplex cone = mapping_cone(f);
    CHECK(homology_rank(cone, 1) == 0);
    CHECK(homology_rank(cone, 2) == 0);
}

TEST_CASE("two-connected torsion check")
{
    const Presentation f1 = Presentation::free_group(1);
    const GroupHom mer = parse_hom("map x1 -> a", f1, kTrefoil);
    const TwoConnectedReport r = two_connected_torsion_check(mer, parse_gamma("1;1", kTrefoil), false);
    CHECK(r.kernel_rank == 0);
    CHECK(r.cokernel_rank == 0);
    CHECK(r.les_consistent);
    CHECK_FALSE(r.falsification);

    const TwoConnectedReport idr = two_connected_torsion_check(GroupHom::identity(kTrefoil), std::nullopt, false);
    CHECK(idr.kernel_rank == 0);
    CHECK(idr.cokernel_rank == 0);

    const Presentation f2 = parse_presentation("gens x y");
    const Presentation z2 = parse_presentation("gens a b\nrel a b a^-1 b^-1");
    const TwoConnectedReport q = two_connected_torsion_check(parse_hom("map x -> a\nmap y -> b", f2, z2),
                                                             parse_gamma("1,0;0,1", z2), false);
    CHECK(q.kernel_rank == 1);
    CHECK(q.cokernel_rank == 0);
    CHECK(q.h2_span.status != HypothesisStatus::Assumed);
    CHECK_FALSE(q.falsification);
    CHECK(q.les_consistent);

    CHECK_FALSE(parse_gamma("auto", z2).has_value());
    CHECK_THROWS_AS(parse_gamma("1,0", z2), Error);
    CHECK_THROWS_AS(parse_gamma("1;2", kTrefoil), Error);
}

TEST_CASE("ccx parsing")
{
    const FreeComplex c = parse_ccx(R"({"vars": 1, "ranks": [1, 1], "boundaries": [[["t1 - 1"]]]})");
    CHECK(c.ranks == std::vector<int>{1, 1});
    CHECK(c.boundaries[0](0, 0) == parse_laurent("t1 - 1", 1));

    try {
        parse_ccx(R"({"vars": 1, "ranks": [1, 1, 1], "boundaries": [[["t1 - 1"]], [["1"]]]})", "bad.ccx");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ErrorKind::InvalidComplex);
        CHECK(e.source() == "bad.ccx");
    }
    try {
        parse_ccx("{\n  \"vars\": 1,\n  \"ranks\": [1\n}", "broken.ccx");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_ccx(R"({"vars": 1, "ranks": [1, 1], "boundaries": [[["t1", "1"]]]})"), ParseError);
    CHECK_THROWS_AS(parse_ccx(R"({"vars": 1, "ranks": [1, 1], "boundaries": [[["t2"]]]})"), ParseError);
}
