#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gslab/integer_matrix.hpp"
#include "gslab/presentation.hpp"

namespace gslab {

// H_1 of a presentation, split into torsion and a chosen Z^b basis of H_1/torsion.
struct AbelianizationData {
    std::vector<Integer> torsion_coefficients;  // each > 1, dividing chain
    int free_rank = 0;
    // m x b: row i is the class of generator i in the Z^b basis.
    IntMatrix basis_map;
    IntMatrix relation_matrix;  // s x m exponent sums

    // Coordinates in Z^b of a word's class.
    std::vector<std::int64_t> image(const Word& w) const;
    // "Z^2 + Z/2", "Z", "0".
    std::string describe() const;
};

IntMatrix relation_matrix(const Presentation& p);
AbelianizationData abelianization(const Presentation& p);

// dim H_1(P; Q)
int h1_rational_dim(const Presentation& p);
// s - rank(relation matrix): dim H_2 of the presentation 2-complex. It bounds
// dim H_2(G; Q) from above, with equality when the presentation is aspherical.
int h2_complex_dim(const Presentation& p);

struct H1RationalMap {
    int source_dim = 0;
    int target_dim = 0;
    int image_dim = 0;
    bool injective() const { return image_dim == source_dim; }
    bool surjective() const { return image_dim == target_dim; }
    bool isomorphism() const { return injective() && surjective(); }
};

// Induced map H_1(A; Q) -> H_1(B; Q) of a generator map.
H1RationalMap induced_h1_rational(const GroupHom& h);

}  // namespace gslab
