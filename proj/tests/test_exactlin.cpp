#include <random>

#include "doctest.h"
#include "gslab/abelian.hpp"
#include "gslab/integer_matrix.hpp"
#include "oracles.hpp"

using namespace gslab;

namespace {

std::vector<std::vector<mpz_class>> rows_of(const IntMatrix& a)
{
    std::vector<std::vector<mpz_class>> out(a.rows(), std::vector<mpz_class>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out[r][c] = a(r, c);
    return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            a(r, c) = d(rng);
    return a;
}

}  // namespace

TEST_CASE("smith normal form examples")
{
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).invariant_factors == std::vector<Integer>{1, 6});
    CHECK(smith_normal_form(IntMatrix(2, 2)).invariant_factors == std::vector<Integer>{0, 0});
    CHECK(smith_normal_form(IntMatrix::identity(3)).invariant_factors == std::vector<Integer>{1, 1, 1});
}

TEST_CASE("smith normal form agrees with determinantal divisors")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        const IntMatrix a = random_matrix(rng, rows, cols, trial % 2 ? 3 : 9);
        const SnfResult s = smith_normal_form(a);
        CHECK(s.U * a * s.V == s.D);
        CHECK(determinant(s.U) * determinant(s.U) == 1);
        CHECK(determinant(s.V) * determinant(s.V) == 1);
        std::vector<Integer> got = s.invariant_factors;
        for (auto& g : got)
            g = abs(g);
        CHECK(got == oracle::invariant_factors(rows_of(a)));
        for (std::size_t i = 0; i + 1 < got.size(); ++i)
            if (got[i + 1] != 0)
                CHECK(got[i + 1] % got[i] == 0);
    }
}

TEST_CASE("rational rank")
{
    CHECK(rational_rank(IntMatrix{{1, -1}}) == 1);
    CHECK(rational_rank(IntMatrix{{2, 4}, {1, 2}}) == 1);
    CHECK(determinant(IntMatrix{{2, 4}, {1, 2}}) == 0);
    CHECK(rational_rank(IntMatrix(0, 3)) == 0);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        IntMatrix a = random_matrix(rng, rows, cols, 2);
        if (rows > 2)
            for (std::size_t c = 0; c < cols; ++c)
                a(2, c) = a(0, c) * 3 - a(1, c);
        std::vector<std::vector<mpq_class>> q(rows, std::vector<mpq_class>(cols));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                q[r][c] = a(r, c);
        CHECK(rational_rank(a) == oracle::rank(q));
        CHECK(rank(a.to_rational()) == oracle::rank(q));
        CHECK(rational_rank(a) <= std::min(rows, cols));
    }
}

TEST_CASE("abelianization")
{
    const AbelianizationData t = abelianization(parse_presentation("gens a b\nrel a b a b^-1 a^-1 b^-1"));
    CHECK(t.free_rank == 1);
    CHECK(t.torsion_coefficients.empty());
    CHECK(t.describe() == "Z");

    CHECK(abelianization(parse_presentation("gens x y")).describe() == "Z^2");

    const AbelianizationData z2 = abelianization(parse_presentation("gens x\nrel x^2"));
    CHECK(z2.free_rank == 0);
    CHECK(z2.torsion_coefficients == std::vector<Integer>{2});

    const AbelianizationData mix = abelianization(parse_presentation("gens x y\nrel y^2\nrel x y x^-1 y^-1"));
    CHECK(mix.describe() == "Z + Z/2");
}

TEST_CASE("abelianization image is additive")
{
    const Presentation p = parse_presentation("gens x y z\nrel x^2 y^4\nrel z^3 y^-2");
    const AbelianizationData ab = abelianization(p);
    const Word u = parse_word("x y^2 z^-1", p), v = parse_word("z z x^-3", p);
    const auto iu = ab.image(u), iv = ab.image(v), iuv = ab.image(u * v);
    for (std::size_t i = 0; i < iuv.size(); ++i)
        CHECK(iuv[i] == iu[i] + iv[i]);
    for (const Word& r : p.relators)
        for (auto e : ab.image(r))
            CHECK(e == 0);
}

TEST_CASE("rational H1 and H2 of presentation complexes")
{
    CHECK(h1_rational_dim(parse_presentation("gens a b\nrel a b a^-1 b^-1")) == 2);
    CHECK(h2_complex_dim(parse_presentation("gens a b\nrel a b a^-1 b^-1")) == 1);
    CHECK(h2_complex_dim(parse_presentation("gens a b\nrel a b a b^-1 a^-1 b^-1")) == 0);
    CHECK(h2_complex_dim(parse_presentation("gens x y")) == 0);
}
