#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "gslab/fox.hpp"
#include "gslab/presentation.hpp"
#include "gslab/verdicts.hpp"

namespace gslab {

struct SubsetSpec {
    Presentation ambient;
    std::vector<Word> elements;
};

// One word per non-empty line, tokens as in .grp relators.
SubsetSpec parse_subset(std::string_view text, const Presentation& ambient, std::string_view source_name = {});

struct FreeSolvableReport {
    int n = 0;
    int elements = 0;
    int h1_rank = 0;  // rank of the classes in H_1(B;Q)
    bool independent = false;
    Hypothesis h2_hypothesis;                  // always assumed or unknown
    std::optional<MonoCertificate> probe;      // n == 2 only
    bool hypotheses_hold = false;
};

FreeSolvableReport freesolvable_hypotheses(const SubsetSpec& s, int n, bool assume_h2 = false);

// Map from the free group on the elements into the ambient group.
GroupHom subset_hom(const SubsetSpec& s);

}  // namespace gslab
