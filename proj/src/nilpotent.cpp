#include "gslab/nilpotent.hpp"

#include <cstdlib>
#include <deque>
#include <map>
#include <string>

#include "gslab/error.hpp"

namespace gslab {

QuotientBounds QuotientBounds::from_environment()
{
    QuotientBounds b;
    if (const char* env = std::getenv("GSL_MAX_BASIS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            b.max_basis = v;
    }
    return b;
}

void QuotientBounds::check(int m, int q) const
{
    if (q < 1)
        throw Error(ErrorKind::InvalidArgument, "truncation degree must be >= 1");
    std::uint64_t p = 1;
    for (int k = 0; k < q; ++k) {
        p *= static_cast<std::uint64_t>(std::max(m, 1));
        if (p > max_basis)
            throw Error(ErrorKind::DegreeOverflow,
                        std::to_string(m) + "^" + std::to_string(q) + " basis words exceed the bound " +
                            std::to_string(max_basis) + " (set GSL_MAX_BASIS to raise it)");
    }
}

namespace {

// X_i * v or v * X_i, dropping terms above degree q.
SparseVector multiply_by_letter(const WordIndex& ix, const SparseVector& v, int letter, bool left)
{
    const int q = ix.max_degree();
    std::map<std::uint32_t, Rational> acc;
    for (const auto& e : v.entries()) {
        const int d = ix.degree_of(e.index);
        if (d + 1 > q)
            continue;
        const std::uint32_t code = e.index - ix.offset(d);
        const std::uint32_t out = left ? ix.concat(1, static_cast<std::uint32_t>(letter), d, code)
                                       : ix.concat(d, code, 1, static_cast<std::uint32_t>(letter));
        acc[out] += e.value;
    }
    SparseVector r;
    for (auto& [i, c] : acc)
        r.push_back(i, c);
    return r;
}

}  // namespace

NilpotentQuotientData truncated_quotient(const Presentation& p, int q, const QuotientBounds& bounds)
{
    const int m = p.rank();
    bounds.check(m, q);
    NilpotentQuotientData nqd;
    nqd.presentation = p;
    nqd.q = q;
    nqd.index = WordIndex(m, q);
    const WordIndex& ix = nqd.index;

    std::deque<SparseVector> queue;
    for (const auto& r : p.relators) {
        TruncatedElement f = magnus_image(r, m, q) - TruncatedElement::one(m, q);
        SparseVector v = f.to_sparse();
        if (nqd.ideal.insert(v))
            queue.push_back(std::move(v));
    }
    while (!queue.empty()) {
        SparseVector v = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < m; ++i)
            for (bool left : {true, false}) {
                SparseVector w = multiply_by_letter(ix, v, i, left);
                if (w.is_zero())
                    continue;
                if (nqd.ideal.insert(w))
                    queue.push_back(std::move(w));
            }
    }

    std::vector<std::int64_t> pivots_in_degree(static_cast<std::size_t>(q) + 1, 0);
    nqd.graded_ideal.assign(static_cast<std::size_t>(q) + 1, EchelonBasis());
    for (std::uint32_t piv : nqd.ideal.pivots()) {
        const int d = ix.degree_of(piv);
        ++pivots_in_degree[static_cast<std::size_t>(d)];
        SparseVector restricted;
        for (const auto& e : nqd.ideal.row_for_pivot(piv).entries())
            if (ix.degree_of(e.index) == d)
                restricted.push_back(e.index - ix.offset(d), e.value);
        nqd.graded_ideal[static_cast<std::size_t>(d)].insert(restricted);
    }
    if (pivots_in_degree[0] != 0)
        throw Error(ErrorKind::InconsistentPBW, "relator ideal contains a unit");
    for (int k = 1; k <= q; ++k)
        nqd.a.push_back(static_cast<std::int64_t>(ix.block_size(k)) - pivots_in_degree[static_cast<std::size_t>(k)]);
    nqd.l = lcs_dimensions_from_hilbert(nqd.a);
    return nqd;
}

SparseVector NilpotentQuotientData::graded_normal_form(const SparseVector& v, int k) const
{
    return graded_ideal.at(static_cast<std::size_t>(k)).reduce(v);
}

std::vector<std::uint32_t> NilpotentQuotientData::standard_monomials(int k) const
{
    std::vector<std::uint32_t> out;
    const EchelonBasis& g = graded_ideal.at(static_cast<std::size_t>(k));
    for (std::uint32_t c = 0; c < index.block_size(k); ++c)
        if (!g.has_pivot(c))
            out.push_back(c);
    return out;
}

std::vector<std::int64_t> lcs_dimensions_from_hilbert(const std::vector<std::int64_t>& a)
{
    const std::size_t q = a.size();
    // Running product prod_{j<k} (1 - t^j)^(-l_j), coefficients 0..q.
    std::vector<Integer> prod(q + 1, Integer(0));
    prod[0] = 1;
    std::vector<std::int64_t> l;
    for (std::size_t k = 1; k <= q; ++k) {
        Integer lk = Integer(static_cast<long>(a[k - 1])) - prod[k];
        if (lk < 0)
            throw Error(ErrorKind::InconsistentPBW,
                        "negative lower-central dimension in degree " + std::to_string(k));
        l.push_back(lk.get_si());
        // Multiply by (1 - t^k)^(-lk) = sum_n binom(lk + n - 1, n) t^(kn).
        std::vector<Integer> next(q + 1, Integer(0));
        for (std::size_t n = 0; n * k <= q; ++n) {
            Integer c;
            if (n == 0)
                c = 1;
            else
                mpz_bin_ui(c.get_mpz_t(), Integer(lk + static_cast<long>(n) - 1).get_mpz_t(),
                           static_cast<unsigned long>(n));
            if (c == 0)
                continue;
            for (std::size_t i = 0; i + n * k <= q; ++i)
                next[i + n * k] += c * prod[i];
        }
        prod = std::move(next);
    }
    return l;
}

int moebius(int n)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "moebius of a non-positive integer");
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        mu = -mu;
    }
    if (n > 1)
        mu = -mu;
    return mu;
}

std::int64_t witt(int m, int k)
{
    if (m < 1 || k < 1)
        throw Error(ErrorKind::InvalidArgument, "witt needs m >= 1 and k >= 1");
    Integer total = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d)
            continue;
        const int mu = moebius(d);
        if (mu == 0)
            continue;
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k / d));
        total += mu * pw;
    }
    total /= k;
    return total.get_si();
}

SparseVector graded_product(const WordIndex& ix, const SparseVector& u, int du, const SparseVector& v, int dv)
{
    std::map<std::uint32_t, Rational> acc;
    const std::uint32_t shift = ix.block_size(dv);
    for (const auto& a : u.entries())
        for (const auto& b : v.entries())
            acc[a.index * shift + b.index] += a.value * b.value;
    (void)du;
    SparseVector r;
    for (auto& [i, c] : acc)
        r.push_back(i, c);
    return r;
}

WellDefinedVerdict hom_welldefined_upto(const GroupHom& h, int q)
{
    const NilpotentQuotientData target = truncated_quotient(h.target, q);
    const int m = h.target.rank();
    WellDefinedVerdict v;
    v.degree = q;
    for (std::size_t i = 0; i < h.source.relators.size(); ++i) {
        const Word image = h.apply(h.source.relators[i]);
        SparseVector f = (magnus_image(image, m, q) - TruncatedElement::one(m, q)).to_sparse();
        if (!target.ideal.contains(f)) {
            v.failing_relator = static_cast<int>(i);
            return v;
        }
    }
    v.certified = true;
    return v;
}

}  // namespace gslab
