#include <random>

#include "doctest.h"
#include "gslab/error.hpp"
#include "gslab/laurent.hpp"
#include "oracles.hpp"

using namespace gslab;

namespace {

LaurentPoly P(const char* s, int b = 1) { return parse_laurent(s, b); }

LaurentPoly random_poly(std::mt19937_64& rng, int b)
{
    std::uniform_int_distribution<int> coeff(-3, 3), ex(-2, 2), terms(0, 3);
    LaurentPoly p(b);
    for (int i = terms(rng); i > 0; --i) {
        Exponent e{};
        for (int v = 0; v < b; ++v)
            e[static_cast<std::size_t>(v)] = ex(rng);
        p += LaurentPoly::monomial(b, e, coeff(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("laurent arithmetic")
{
    CHECK((P("t1 - 1") + P("1 - t1")).is_zero());
    CHECK(P("t1 - 1") * P("t1^-1") == P("1 - t1^-1"));
    CHECK(P("t1 + t2", 2) * P("t1 + t2", 2) == P("t1^2 + 2*t1*t2 + t2^2", 2));
    CHECK(P("-1/2*t1 + 3*t1^2*t2^-1", 2).term_count() == 2);
    CHECK(P("t^2 - t + 1") == P("t1^2 - t1 + 1"));
    CHECK(P("t1^3 - 1").divide_exact(P("t1 - 1")) == P("t1^2 + t1 + 1"));
    CHECK_FALSE(P("t1^2 + 1").divide_exact(P("t1 - 1")).has_value());
    CHECK(P("-2*t1^-3").unit_inverse() * P("-2*t1^-3") == P("1"));
    CHECK(P("t1^2 + t1").augmentation() == 2);
}

TEST_CASE("laurent parse errors")
{
    CHECK_THROWS_AS(P("t3", 2), Error);
    CHECK_THROWS_AS(P("3 * * t1"), Error);
    CHECK_THROWS_AS(P("t1^"), Error);
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int b = 1 + trial % 3;
        const LaurentPoly a = random_poly(rng, b), c = random_poly(rng, b), d = random_poly(rng, b);
        CHECK(a * c == c * a);
        CHECK((a * c) * d == a * (c * d));
        CHECK(a * (c + d) == a * c + a * d);
        CHECK((a - a).is_zero());
        CHECK(parse_laurent(a.to_string(), b) == a);
        const std::vector<Rational> pt(static_cast<std::size_t>(b), Rational(3, 2));
        CHECK((a * c).evaluate(pt) == a.evaluate(pt) * c.evaluate(pt));
        if (!c.is_zero())
            CHECK((a * c).divide_exact(c) == a);
    }
}

TEST_CASE("rank over the fraction field")
{
    LaurentMatrix row(1, 2, 2);
    row(0, 0) = P("t1 - 1", 2);
    row(0, 1) = P("t2 - 1", 2);
    CHECK(bareiss_rank(row) == 1);
    CHECK(kernel_rank(row) == 0);
    CHECK(kernel_rank(row.transpose()) == 1);

    LaurentMatrix col(2, 1, 1);
    col(0, 0) = P("t - 1");
    col(1, 0) = P("t^2 - t");
    CHECK(bareiss_rank(col) == 1);
    CHECK(bareiss_rank(LaurentMatrix(3, 3, 2)) == 0);
    CHECK(kernel_rank(LaurentMatrix::identity(2, 1)) == 0);

    LaurentMatrix dep(1, 2, 1);
    dep(0, 0) = P("t - 1");
    dep(0, 1) = P("1 - t");
    CHECK(kernel_rank(dep.transpose()) == 1);
}

TEST_CASE("augmentation")
{
    LaurentMatrix m(1, 1, 1);
    m(0, 0) = P("t - 1");
    CHECK(augment(m)(0, 0) == 0);
    m(0, 0) = P("t^2 + t");
    CHECK(augment(m)(0, 0) == 2);
    m(0, 0) = P("t^2 - t + 1");
    CHECK(augment(m)(0, 0) == 1);
}

TEST_CASE("bareiss rank dominates every specialization and matches generic points")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        const int b = 1 + trial % 2;
        const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
        LaurentMatrix m(rows, cols, b);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = random_poly(rng, b);
        if (rows == 3)
            for (std::size_t c = 0; c < cols; ++c)
                m(2, c) = m(0, c) * P(b == 1 ? "t1 + 2" : "t1*t2 - 1", b) + m(1, c);
        const std::size_t r = bareiss_rank(m);
        std::size_t best = 0;
        for (int s = 0; s < 4; ++s) {
            std::vector<Rational> pt;
            for (int v = 0; v < b; ++v)
                pt.emplace_back(static_cast<long>(2 + s + 3 * v), 3 + v);
            const QMatrix e = m.evaluate(pt);
            std::vector<std::vector<mpq_class>> rows_q(e.rows(), std::vector<mpq_class>(e.cols()));
            for (std::size_t i = 0; i < e.rows(); ++i)
                for (std::size_t j = 0; j < e.cols(); ++j)
                    rows_q[i][j] = e(i, j);
            const std::size_t er = oracle::rank(rows_q);
            CHECK(er <= r);
            best = std::max(best, er);
        }
        CHECK(best == r);
        CHECK(kernel_rank(m) == rows - r);
        const LaurentMatrix k = left_kernel_basis(m);
        CHECK(k.rows() == rows - r);
        if (k.rows() > 0)
            CHECK((k * m).is_zero());
    }
}

TEST_CASE("scaled left solve")
{
    LaurentMatrix m(2, 2, 1);
    m(0, 0) = P("t");
    m(1, 1) = P("t - 1");
    LaurentMatrix rhs(1, 2, 1);
    rhs(0, 0) = P("1");
    rhs(0, 1) = P("1");
    const auto s = solve_left_scaled(m, rhs);
    REQUIRE(s.has_value());
    LaurentMatrix scaled = rhs;
    scaled.scale(s->scale);
    CHECK(s->solution * m == scaled);
    CHECK_FALSE(s->scale.is_zero());

    LaurentMatrix thin(1, 2, 1);
    thin(0, 0) = P("t");
    CHECK_FALSE(solve_left_scaled(thin, rhs).has_value());
}
