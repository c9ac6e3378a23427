#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gslab/abelian.hpp"
#include "gslab/laurent.hpp"
#include "gslab/presentation.hpp"

namespace gslab {

// Finite Q-linear combination of reduced words of a free group.
class GroupRingElt {
public:
    GroupRingElt() = default;
    static GroupRingElt one();
    static GroupRingElt of(const Word& w, const Rational& coeff = 1);

    const std::map<Word, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    GroupRingElt& operator+=(const GroupRingElt& o);
    GroupRingElt& operator-=(const GroupRingElt& o);
    friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) { return a += b; }
    friend GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) { return a -= b; }
    friend GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b);
    friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void add_term(const Word& w, const Rational& c);
    std::map<Word, Rational> terms_;
};

GroupRingElt fox_derivative(const Word& w, int gen);

// Z^b-valued coefficient system on the free group of a presentation.
struct CoefficientSystem {
    int nvars = 0;
    IntMatrix generator_images;  // rank x nvars

    std::vector<std::int64_t> image(const Word& w) const;
    // Checks every relator maps to 0.
    bool kills(const std::vector<Word>& relators) const;
};

// Torsion-free abelianization H_1/torsion of the presentation.
CoefficientSystem abelian_coefficients(const Presentation& p);
// Coefficients on the source pulled back along h from a system on h's target.
CoefficientSystem pull_back(const GroupHom& h, const CoefficientSystem& on_target);

// Fox Jacobian (words x generators) pushed into the Laurent ring.
LaurentMatrix fox_jacobian(const std::vector<Word>& words, int rank, const CoefficientSystem& coeffs);

// Row-vector convention: C_2 -d2-> C_1 -d1-> C_0, d2 * d1 = 0.
struct AlexanderComplex {
    int b = 0;
    LaurentMatrix d2;  // s x m
    LaurentMatrix d1;  // m x 1, entries t^{ab(x_i)} - 1
};

AlexanderComplex alexander_complex(const Presentation& p);
AlexanderComplex alexander_complex(const Presentation& p, const CoefficientSystem& coeffs);

// rank of ker d1 / im d2 over the fraction field.
int h1_rank(const AlexanderComplex& c);
int h1_rank_abelian_cover(const Presentation& p);

struct InducedAlexanderMap {
    CoefficientSystem coefficients;  // on the target
    AlexanderComplex source;         // coefficients pulled back along h
    AlexanderComplex target;
    LaurentMatrix chain_map_1;       // m_A x m_B Fox Jacobian of the images
    LaurentMatrix source_cycles;     // rows span ker d1 of the source
    // Degree-2 component up to the scalar c: F2 * d2_B = c * d2_A * chain_map_1.
    ScaledSolution chain_map_2;
    bool coefficients_injective = false;
    int source_rank = 0;
    int target_rank = 0;
    int image_rank = 0;
    int kernel_rank() const { return source_rank - image_rank; }
    int cokernel_rank() const { return target_rank - image_rank; }
};

// Level-one induced map with coefficients in H_1(B)/torsion, or in a supplied system.
// Throws NotWellDefined when h fails the degree-2 Magnus check or the relator
// images leave the row space of the target Jacobian.
InducedAlexanderMap induced_alexander_map(const GroupHom& h);
InducedAlexanderMap induced_alexander_map(const GroupHom& h, const CoefficientSystem& on_target);

struct MonoCertificate {
    bool rank_preserved = false;
    int source_rank = 0;
    int image_rank = 0;
    bool coefficients_injective = false;
};

MonoCertificate metabelian_mono_certificate(const GroupHom& h);

}  // namespace gslab
