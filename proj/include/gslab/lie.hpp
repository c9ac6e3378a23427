#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gslab/linalg.hpp"
#include "gslab/nilpotent.hpp"
#include "gslab/presentation.hpp"

namespace gslab {

// Finite-dimensional positively graded Lie algebra over Q with a homogeneous basis.
// Basis elements are numbered degree by degree; brackets landing above the top
// degree are zero.
class GradedLie {
public:
    GradedLie() = default;
    // dims[k-1] = dimension in degree k. table[i][j] = [e_i, e_j] over global indices;
    // only i < j is read and the rest is filled in by antisymmetry.
    static GradedLie from_structure(std::vector<int> dims, std::vector<std::string> labels,
                                    const std::vector<std::vector<SparseVector>>& table);
    // Abelian algebra concentrated in degree 1.
    static GradedLie abelian(int dim);

    int top_degree() const noexcept { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const noexcept { return dims_; }
    int dim(int degree) const;
    int dimension() const noexcept { return static_cast<int>(degree_.size()); }
    int offset(int degree) const;
    int degree_of(int i) const { return degree_.at(static_cast<std::size_t>(i)); }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    const SparseVector& bracket(int i, int j) const;
    SparseVector bracket(const SparseVector& u, const SparseVector& v) const;

    // Quotient by the part of degree > c.
    GradedLie truncate(int c) const;

    bool antisymmetric() const;
    // Jacobi identity on all basis triples; first failure as (i, j, k) if any.
    bool jacobi(int* fi = nullptr, int* fj = nullptr, int* fk = nullptr) const;

private:
    std::vector<int> dims_;
    std::vector<int> degree_;
    std::vector<std::string> labels_;
    std::vector<std::vector<SparseVector>> table_;
};

// Graded Lie algebra of a group together with its embedding in gr QG.
struct LieModel {
    GradedLie lie;
    // elements[i] = normal form (block-local codes, degree lie.degree_of(i)) of
    // basis element i inside gr QG.
    std::vector<SparseVector> elements;
    // For degree >= 2: basis element i is [parent[i], e_{generator[i]}], with
    // generator[i] a degree-1 basis index. Degree-1 elements have parent -1 and
    // generator[i] = the presentation generator they are the class of.
    std::vector<int> parent;
    std::vector<int> generator;
    // spans[k-1]: tracked echelon basis of the degree-k elements, inserted in basis
    // order, so coordinates() returns block-local basis coordinates.
    std::vector<EchelonBasis> spans;
    // Coordinates (global basis indices) of a homogeneous degree-k algebra element
    // already known to lie in the Lie span; throws DimensionMismatch otherwise.
    SparseVector lie_coordinates(const SparseVector& v, int k) const;
};

// Left-normed brackets of the degree-1 classes, degrees 1..c (c <= nqd.q).
// Throws DimensionMismatch when a span disagrees with l_k.
LieModel extract_graded_lie(const NilpotentQuotientData& nqd, int c);

struct CEReport {
    int h1 = 0;
    int h2 = 0;
    int dim_l = 0;
    std::int64_t dim_wedge2 = 0;
    std::int64_t dim_wedge3 = 0;
    int rank_d2 = 0;
    int rank_d3 = 0;
    bool boundary_squared_zero = true;
};

// Chevalley-Eilenberg H_1, H_2 with d2(a^b) = [a,b] and
// d3(a^b^c) = [a,b]^c - [a,c]^b + [b,c]^a.
CEReport ce_h1_h2(const GradedLie& l);

// Image of the degree-1 generators under the map of Lie models induced by h:
// rows = source basis, columns = target basis, degrees 1..c.
// Both models must have top degree >= c.
std::vector<QMatrix> induced_lie_maps(const GroupHom& h, const LieModel& source, const LieModel& target,
                                      const NilpotentQuotientData& target_nqd, int c);

// Induced map of graded algebras gr QA -> gr QB in degrees 1..c, on standard
// monomials (rows = source standard monomials, columns = target).
std::vector<QMatrix> induced_algebra_maps(const GroupHom& h, const NilpotentQuotientData& source,
                                          const NilpotentQuotientData& target, int c);

// dim H_2(L_{<n}) - l_n in the graded model (n >= 2).
std::int64_t dwyer_quotient_dim(const Presentation& p, int n);
// Same number read as dim ker(Lambda^2 L_{<n} -> L_{<=n}) - rank d3 on L_{<n}.
std::int64_t dwyer_quotient_dim_crosscheck(const Presentation& p, int n);

// Kernel of the bracket Lambda^2 L_{<n} -> L_{<=n} (L of top degree >= n), as vectors
// over the pair basis of Lambda^2 L_{<n}, and the image of d3 on L_{<n}.
struct DwyerSpaces {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;  // pair basis (i < j) of Lambda^2 L_{<n}
    std::vector<SparseVector> kernel;
    std::vector<SparseVector> boundaries;    // spans im d3
};
DwyerSpaces dwyer_spaces(const GradedLie& l, int n);

}  // namespace gslab
