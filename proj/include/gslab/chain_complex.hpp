#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gslab/abelian.hpp"
#include "gslab/fox.hpp"
#include "gslab/laurent.hpp"
#include "gslab/verdicts.hpp"

namespace gslab {

// Finite free complex over Q[t_1^±1..t_b^±1], row-vector convention:
// boundaries[i] is the boundary C_{i+1} -> C_i, a ranks[i+1] x ranks[i] matrix,
// and consecutive boundaries multiply to zero.
struct FreeComplex {
    int b = 0;
    std::vector<int> ranks;
    std::vector<LaurentMatrix> boundaries;

    int top() const { return static_cast<int>(ranks.size()) - 1; }
    int rank_at(int p) const;
    // Boundary C_p -> C_{p-1}; an empty matrix of the right shape outside the range.
    LaurentMatrix boundary(int p) const;

    static FreeComplex from_alexander(const AlexanderComplex& c);
};

struct ComplexCheck {
    bool valid = true;
    std::string failure;  // first failure, empty when valid
};
ComplexCheck complex_validate(const FreeComplex& c);

// Rank of H_p over the fraction field.
int homology_rank(const FreeComplex& c, int p);
// Q-dimension of H_p after t_i -> 1.
int augmented_homology_dim(const FreeComplex& c, int p);

struct StrebelLine {
    int p = 0;
    int lambda_rank = 0;
    int q_dim = 0;
    bool ok = true;
};
struct StrebelReport {
    std::vector<StrebelLine> lines;
    bool falsification = false;
};
// Throws InvalidComplex on an invalid complex.
StrebelReport strebel_audit(const FreeComplex& c);

struct EulerReport {
    std::int64_t from_ranks = 0;
    std::int64_t from_lambda = 0;
    std::int64_t from_q = 0;
    bool falsification = false;
};
EulerReport euler_characteristic_report(const FreeComplex& c);

struct QuotientBound {
    int p = 0;
    int cycles = 0;
    FreeComplex extended;  // D: a free summand per cycle added in dimension p+1
    int k_lambda = 0;
    int k_q = 0;
    int original_lambda = 0;
    int original_q = 0;
    bool cycles_unchanged = true;  // boundary C_p -> C_{p-1} untouched
    bool falsification = false;
};
// cycles: rows of length ranks[p]; throws NotACycle naming the first offender.
QuotientBound quotient_rank_bound(const FreeComplex& c, const LaurentMatrix& cycles, int p);

struct ChainMap {
    FreeComplex source;
    FreeComplex target;
    std::vector<LaurentMatrix> maps;  // maps[i]: source C_i -> target C_i
    LaurentMatrix at(int i) const;
};
ComplexCheck chain_map_validate(const ChainMap& f);

// Z_i = X_{i-1} + Y_i with boundary [[-dX, f], [0, dY]] (row convention).
FreeComplex mapping_cone(const ChainMap& f);

// Rank over the fraction field of the induced map H_p(X) -> H_p(Y).
int homology_map_rank(const ChainMap& f, int p);

// Chain map of Alexander complexes induced by h (degrees 0..2), scaled so that
// it commutes exactly.
ChainMap alexander_chain_map(const InducedAlexanderMap& m);

// Parses "auto" or rows like "1;0,1": one row per target generator, entries
// separated by commas, rows by semicolons (or '/').
std::optional<CoefficientSystem> parse_gamma(std::string_view spec, const Presentation& target);

struct TwoConnectedReport {
    CoefficientSystem gamma;
    H1RationalMap h1;
    Hypothesis h1_mono;
    Hypothesis h1_iso;
    Hypothesis h2_span;
    int source_rank = 0;
    int target_rank = 0;
    int image_rank = 0;
    int kernel_rank = 0;
    int cokernel_rank = 0;
    std::vector<int> cone_lambda;  // rank H_p(cone), p = 0..top
    std::vector<int> cone_q;
    bool les_consistent = true;
    bool cone_strebel_ok = true;
    bool kernel_conclusion_applies = false;
    bool cokernel_conclusion_applies = false;
    bool assumption_refuted = false;  // kernel nonzero under an assumed H2 hypothesis
    bool falsification = false;
};

// gamma nullopt means H_1(B)/torsion. assume_h2 records the surface hypothesis as assumed.
TwoConnectedReport two_connected_torsion_check(const GroupHom& h, const std::optional<CoefficientSystem>& gamma,
                                               bool assume_h2);

// .ccx: {"vars": b, "ranks": [...], "boundaries": [[["poly", ...], ...], ...]}.
// Shape and chain-condition failures are reported as ParseError with a JSON path.
FreeComplex parse_ccx(std::string_view text, std::string_view source_name = {});

struct FuzzBounds {
    int max_vars = 3;
    int max_rank = 6;
    int max_degree = 3;
};
// Seeded random valid complex: sums of Koszul and single-map pieces conjugated by
// elementary base changes, or the Alexander complex of a random presentation.
FreeComplex random_valid_complex(std::mt19937_64& rng, const FuzzBounds& bounds = {});
// Random p-cycles (Laurent combinations of a left-kernel basis), possibly zero.
LaurentMatrix random_cycles(const FreeComplex& c, int p, int count, std::mt19937_64& rng);

struct FuzzSummary {
    int instances = 0;
    int strebel_violations = 0;
    int euler_violations = 0;
    int quotient_instances = 0;
    int quotient_violations = 0;
    int invalid_generated = 0;
};
FuzzSummary fuzz_strebel(int count, std::uint64_t seed, int quotient_count, const FuzzBounds& bounds = {});

}  // namespace gslab
