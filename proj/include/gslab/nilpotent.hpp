#pragma once

#include <cstdint>
#include <vector>

#include "gslab/linalg.hpp"
#include "gslab/presentation.hpp"
#include "gslab/truncated.hpp"

namespace gslab {

// Dense-algebra ceiling: m^q basis words at the top degree.
struct QuotientBounds {
    std::uint64_t max_basis = 5000;
    // Honors GSL_MAX_BASIS when set.
    static QuotientBounds from_environment();
    void check(int m, int q) const;
};

// Model of QG / I^(q+1) as T_q / J, J the two-sided ideal of Magnus relators.
struct NilpotentQuotientData {
    Presentation presentation;
    int q = 0;
    WordIndex index;
    // Echelon basis of J; columns in ascending degree so pivots of degree >= k
    // span J ∩ Î^k.
    EchelonBasis ideal;
    // Initial forms of J per degree (block-local codes); graded_ideal[k] for k = 0..q.
    std::vector<EchelonBasis> graded_ideal;
    std::vector<std::int64_t> a;  // a[k-1] = dim gr_k of the algebra, k = 1..q
    std::vector<std::int64_t> l;  // l[k-1] = rational lcs quotient dimension

    int letters() const { return presentation.rank(); }
    // Normal form of a homogeneous degree-k element (block-local codes) modulo gr J.
    SparseVector graded_normal_form(const SparseVector& v, int k) const;
    // Degree-k monomial codes not in the initial ideal; a basis of gr_k.
    std::vector<std::uint32_t> standard_monomials(int k) const;
};

NilpotentQuotientData truncated_quotient(const Presentation& p, int q,
                                         const QuotientBounds& bounds = QuotientBounds::from_environment());

// l_k from 1 + sum a_k t^k = prod (1 - t^k)^(-l_k) mod t^(q+1).
// Throws InconsistentPBW on a negative value.
std::vector<std::int64_t> lcs_dimensions_from_hilbert(const std::vector<std::int64_t>& a);

// Witt necklace count (1/k) sum_{d|k} mu(d) m^(k/d).
std::int64_t witt(int m, int k);
int moebius(int n);

// Product of homogeneous elements given by block-local codes.
SparseVector graded_product(const WordIndex& ix, const SparseVector& u, int du, const SparseVector& v, int dv);

}  // namespace gslab
