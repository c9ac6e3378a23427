#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gslab/abelian.hpp"
#include "gslab/lie.hpp"
#include "gslab/linalg.hpp"
#include "gslab/presentation.hpp"

namespace gslab {

enum class GrVerdict { Iso, Mono, Epi, Neither };
std::string to_string(GrVerdict v);
GrVerdict classify(std::int64_t rank, std::int64_t source_dim, std::int64_t target_dim);

struct GrDegree {
    int k = 0;
    std::int64_t a_src = 0, a_tgt = 0;
    std::int64_t l_src = 0, l_tgt = 0;
    std::int64_t lie_rank = 0;
    std::int64_t algebra_rank = 0;
    GrVerdict verdict = GrVerdict::Neither;          // Lie level
    GrVerdict algebra_verdict = GrVerdict::Neither;  // graded algebra level
    QMatrix lie_matrix;                              // rows source, columns target
};

struct GrMapReport {
    int q = 0;
    std::vector<GrDegree> degrees;
    bool iso_through(int k) const;
    // First degree whose Lie map is not an isomorphism.
    std::optional<int> first_non_iso() const;
};

// Requires hom_welldefined_upto(h, q); throws NotWellDefined otherwise.
GrMapReport induced_gr_maps(const GroupHom& h, int q);

enum class HypothesisStatus { Verified, Assumed, Unknown, Failed };
std::string to_string(HypothesisStatus s);

struct Hypothesis {
    HypothesisStatus status = HypothesisStatus::Unknown;
    std::string reason;
    bool holds() const { return status == HypothesisStatus::Verified || status == HypothesisStatus::Assumed; }
};

// Epimorphism on H_2(-;Q): verified for identity maps and when the target's
// presentation complex has no rational 2-cycles; otherwise assumed on request.
Hypothesis h2_epi_hypothesis(const GroupHom& h, bool assume);

struct StallingsReport {
    H1RationalMap h1;
    Hypothesis h1_iso;
    Hypothesis h2_epi;
    GrMapReport gr;
    bool hypotheses_hold = false;
    bool conclusion_holds = false;
    bool assumption_refuted = false;  // conclusion fails under an assumed hypothesis
    bool falsification = false;
};

StallingsReport stallings_rational_verdict(const GroupHom& h, int q, bool assume_h2_epi = false);

struct DwyerOptions {
    // Also report dim H_2(-;Q) of both groups; needs both presentations flagged aspherical.
    bool group_h2 = false;
};

struct DwyerLevel {
    int k = 0;
    CEReport src;  // class-k model of A/A_{k+1}
    CEReport tgt;
    bool homology_iso = false;
};

struct DwyerReport {
    int n = 0;
    H1RationalMap h1;
    GrMapReport gr;
    std::vector<DwyerLevel> levels;
    std::int64_t quotient_dim_src = 0;
    std::int64_t quotient_dim_tgt = 0;
    std::optional<int> group_h2_src;
    std::optional<int> group_h2_tgt;
    bool side1 = false;  // gr iso and model homology iso through degree n
    bool side2 = false;  // epi on the Dwyer quotients, graded model
    std::string status;  // "consistent", "inconclusive (graded model)", "h1 hypothesis fails"
    bool falsification = false;
};

DwyerReport dwyer_rational_verdict(const GroupHom& h, int n, const DwyerOptions& options = {});

}  // namespace gslab
