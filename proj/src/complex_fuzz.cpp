#include <algorithm>
#include <random>

#include "gslab/chain_complex.hpp"
#include "gslab/error.hpp"

namespace gslab {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

LaurentPoly random_monomial(std::mt19937_64& rng, int b, int max_degree)
{
    Exponent e{};
    int budget = max_degree;
    for (int i = 0; i < b && budget > 0; ++i) {
        const int x = uniform(rng, -1, 1);
        e[static_cast<std::size_t>(i)] = x;
        budget -= std::abs(x);
    }
    int c = 0;
    while (c == 0)
        c = uniform(rng, -2, 2);
    return LaurentPoly::monomial(b, e, c);
}

LaurentPoly random_poly(std::mt19937_64& rng, int b, int max_degree)
{
    const int kind = uniform(rng, 0, 9);
    if (kind == 0)
        return LaurentPoly(b);
    if (kind <= 3) {
        // A multiple of t_i - 1, so the augmentation vanishes.
        const int i = uniform(rng, 0, b - 1);
        LaurentPoly f = LaurentPoly::variable(b, i) - LaurentPoly(b, 1);
        return f * random_monomial(rng, b, std::max(max_degree - 1, 0));
    }
    LaurentPoly p(b);
    const int terms = uniform(rng, 1, 3);
    for (int t = 0; t < terms; ++t)
        p += random_monomial(rng, b, max_degree);
    return p;
}

LaurentMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int b, int max_degree)
{
    LaurentMatrix m(r, c, b);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = random_poly(rng, b, max_degree);
    return m;
}

// A piece occupying dimensions lo..lo+len with given ranks and boundaries.
struct Piece {
    int lo = 0;
    std::vector<int> ranks;
    std::vector<LaurentMatrix> boundaries;  // boundaries[i]: ranks[i+1] x ranks[i]
};

Piece koszul(std::mt19937_64& rng, int b, int length, int max_degree)
{
    Piece p;
    std::vector<LaurentPoly> f;
    for (int i = 0; i < length; ++i)
        f.push_back(random_poly(rng, b, max_degree));
    if (length == 1) {
        p.ranks = {1, 1};
        LaurentMatrix d(1, 1, b);
        d(0, 0) = f[0];
        p.boundaries = {d};
    } else if (length == 2) {
        p.ranks = {1, 2, 1};
        LaurentMatrix d1(2, 1, b), d2(1, 2, b);
        d1(0, 0) = f[0];
        d1(1, 0) = f[1];
        d2(0, 0) = f[1];
        d2(0, 1) = -f[0];
        p.boundaries = {d1, d2};
    } else {
        // Koszul complex of (f0, f1, f2) in row convention.
        p.ranks = {1, 3, 3, 1};
        LaurentMatrix d1(3, 1, b), d2(3, 3, b), d3(1, 3, b);
        for (int i = 0; i < 3; ++i)
            d1(static_cast<std::size_t>(i), 0) = f[static_cast<std::size_t>(i)];
        // rows e01, e02, e12 ; d(e_ij) = f_i e_j - f_j e_i
        d2(0, 1) = f[0];
        d2(0, 0) = -f[1];
        d2(1, 2) = f[0];
        d2(1, 0) = -f[2];
        d2(2, 2) = f[1];
        d2(2, 1) = -f[2];
        // d(e012) = f0 e12 - f1 e02 + f2 e01
        d3(0, 2) = f[0];
        d3(0, 1) = -f[1];
        d3(0, 0) = f[2];
        p.boundaries = {d1, d2, d3};
    }
    return p;
}

// Random invertible matrix and its inverse from a few elementary operations.
std::pair<LaurentMatrix, LaurentMatrix> random_base_change(std::mt19937_64& rng, std::size_t n, int b)
{
    LaurentMatrix p = LaurentMatrix::identity(n, b);
    LaurentMatrix pinv = LaurentMatrix::identity(n, b);
    if (n == 0)
        return {p, pinv};
    const int ops = uniform(rng, 0, 2);
    for (int o = 0; o < ops; ++o) {
        LaurentMatrix e = LaurentMatrix::identity(n, b);
        LaurentMatrix einv = LaurentMatrix::identity(n, b);
        if (n >= 2 && uniform(rng, 0, 1) == 0) {
            const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
            auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
            if (j >= i)
                ++j;
            const LaurentPoly c = random_monomial(rng, b, 1);
            e(i, j) = c;
            einv(i, j) = -c;
        } else {
            const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
            Exponent x{};
            x[static_cast<std::size_t>(uniform(rng, 0, b - 1))] = uniform(rng, -1, 1);
            const LaurentPoly u = LaurentPoly::monomial(b, x, uniform(rng, 0, 1) ? 1 : -1);
            e(i, i) = u;
            einv(i, i) = u.unit_inverse();
        }
        p = e * p;
        pinv = pinv * einv;
    }
    return {p, pinv};
}

FreeComplex random_piece_sum(std::mt19937_64& rng, int b, const FuzzBounds& bounds)
{
    const int top = uniform(rng, 1, 3);
    FreeComplex c;
    c.b = b;
    c.ranks.assign(static_cast<std::size_t>(top) + 1, 0);
    std::vector<Piece> pieces;
    const int count = uniform(rng, 1, 4);
    for (int k = 0; k < count; ++k) {
        Piece p;
        const int kind = uniform(rng, 0, 3);
        if (kind == 0) {
            p.lo = uniform(rng, 0, top - 1);
            const int r0 = uniform(rng, 1, 2), r1 = uniform(rng, 1, 2);
            p.ranks = {r0, r1};
            p.boundaries = {random_matrix(rng, static_cast<std::size_t>(r1), static_cast<std::size_t>(r0), b,
                                          bounds.max_degree)};
        } else if (kind == 3) {
            p.lo = uniform(rng, 0, top);
            p.ranks = {1};
        } else {
            const int len = std::min(uniform(rng, 1, 3), top);
            p = koszul(rng, b, len, bounds.max_degree);
            p.lo = uniform(rng, 0, top - len);
        }
        bool fits = true;
        for (std::size_t i = 0; i < p.ranks.size(); ++i)
            if (c.ranks[static_cast<std::size_t>(p.lo) + i] + p.ranks[i] > bounds.max_rank)
                fits = false;
        if (!fits)
            continue;
        for (std::size_t i = 0; i < p.ranks.size(); ++i)
            c.ranks[static_cast<std::size_t>(p.lo) + i] += p.ranks[i];
        pieces.push_back(std::move(p));
    }
    // Block-diagonal assembly.
    for (int d = 1; d <= top; ++d)
        c.boundaries.emplace_back(static_cast<std::size_t>(c.ranks[static_cast<std::size_t>(d)]),
                                  static_cast<std::size_t>(c.ranks[static_cast<std::size_t>(d) - 1]), b);
    std::vector<int> used(static_cast<std::size_t>(top) + 1, 0);
    for (const Piece& p : pieces) {
        for (std::size_t i = 0; i < p.boundaries.size(); ++i) {
            const std::size_t dim = static_cast<std::size_t>(p.lo) + i + 1;
            const LaurentMatrix& m = p.boundaries[i];
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t col = 0; col < m.cols(); ++col)
                    c.boundaries[dim - 1](static_cast<std::size_t>(used[dim]) + r,
                                          static_cast<std::size_t>(used[dim - 1]) + col) = m(r, col);
        }
        for (std::size_t i = 0; i < p.ranks.size(); ++i)
            used[static_cast<std::size_t>(p.lo) + i] += p.ranks[i];
    }
    // Conjugate by base changes: d'_p = P_p d_p P_{p-1}^{-1}.
    std::vector<std::pair<LaurentMatrix, LaurentMatrix>> change;
    for (int d = 0; d <= top; ++d)
        change.push_back(random_base_change(rng, static_cast<std::size_t>(c.ranks[static_cast<std::size_t>(d)]), b));
    for (int d = 1; d <= top; ++d) {
        LaurentMatrix& m = c.boundaries[static_cast<std::size_t>(d) - 1];
        m = change[static_cast<std::size_t>(d)].first * m * change[static_cast<std::size_t>(d) - 1].second;
    }
    return c;
}

std::optional<FreeComplex> random_presentation_complex(std::mt19937_64& rng, const FuzzBounds& bounds)
{
    Presentation p;
    const int m = uniform(rng, 1, 3);
    for (int i = 0; i < m; ++i)
        p.generators.push_back("x" + std::to_string(i + 1));
    const int s = uniform(rng, 0, 3);
    for (int r = 0; r < s; ++r) {
        std::vector<Letter> letters;
        const int len = uniform(rng, 1, 5);
        for (int k = 0; k < len; ++k)
            letters.push_back({uniform(rng, 0, m - 1), uniform(rng, 0, 1) ? 1 : -1});
        Word w = free_reduce(Word(std::move(letters)));
        if (!w.empty())
            p.relators.push_back(std::move(w));
    }
    const AbelianizationData ab = abelianization(p);
    if (ab.free_rank == 0 || ab.free_rank > bounds.max_vars)
        return std::nullopt;
    return FreeComplex::from_alexander(alexander_complex(p));
}

}  // namespace

FreeComplex random_valid_complex(std::mt19937_64& rng, const FuzzBounds& bounds)
{
    if (uniform(rng, 0, 4) == 0)
        for (int attempt = 0; attempt < 8; ++attempt)
            if (auto c = random_presentation_complex(rng, bounds))
                return *c;
    const int b = uniform(rng, 1, bounds.max_vars);
    return random_piece_sum(rng, b, bounds);
}

LaurentMatrix random_cycles(const FreeComplex& c, int p, int count, std::mt19937_64& rng)
{
    const auto n = static_cast<std::size_t>(c.rank_at(p));
    const LaurentMatrix dp = c.boundary(p);
    const LaurentMatrix basis = dp.cols() == 0 ? LaurentMatrix::identity(n, c.b) : left_kernel_basis(dp);
    LaurentMatrix out(static_cast<std::size_t>(count), n, c.b);
    for (int k = 0; k < count; ++k) {
        if (basis.rows() == 0 || uniform(rng, 0, 5) == 0)
            continue;
        LaurentMatrix coeff(1, basis.rows(), c.b);
        for (std::size_t j = 0; j < basis.rows(); ++j)
            coeff(0, j) = uniform(rng, 0, 2) == 0 ? LaurentPoly(c.b) : random_monomial(rng, c.b, 1);
        const LaurentMatrix row = coeff * basis;
        for (std::size_t j = 0; j < n; ++j)
            out(static_cast<std::size_t>(k), j) = row(0, j);
    }
    return out;
}

FuzzSummary fuzz_strebel(int count, std::uint64_t seed, int quotient_count, const FuzzBounds& bounds)
{
    FuzzSummary s;
    for (int i = 0; i < std::max(count, quotient_count); ++i) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(seq);
        const FreeComplex c = random_valid_complex(rng, bounds);
        if (!complex_validate(c).valid) {
            ++s.invalid_generated;
            continue;
        }
        if (i < count) {
            ++s.instances;
            if (strebel_audit(c).falsification)
                ++s.strebel_violations;
            if (euler_characteristic_report(c).falsification)
                ++s.euler_violations;
        }
        if (i < quotient_count) {
            ++s.quotient_instances;
            const int p = uniform(rng, 0, c.top());
            const LaurentMatrix cycles = random_cycles(c, p, uniform(rng, 0, 2), rng);
            if (quotient_rank_bound(c, cycles, p).falsification)
                ++s.quotient_violations;
        }
    }
    return s;
}

}  // namespace gslab
