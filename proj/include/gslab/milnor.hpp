#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gslab/linalg.hpp"
#include "gslab/presentation.hpp"

namespace gslab {

// y = w * base * w^-1
struct ConjugationRule {
    int generator = 0;
    Word conjugator;
    int base = 0;
};

struct LinkData {
    int m = 0;
    Presentation presentation;          // every generator named in the input
    std::vector<int> meridians;         // generator index per component
    std::vector<Word> longitudes;       // per component, over presentation generators
    std::vector<ConjugationRule> conjugation_table;

    // Component of each generator, -1 when not determined by the table.
    std::vector<int> components() const;
    // Meridians and longitudes given directly in m meridian generators x1..xm.
    static LinkData from_longitudes(std::vector<Word> longitudes_in_meridians);
};

// .lnk: `components m`, `meridian j g`, `conj y = w ... | base g`, `longitude j w ...`,
// optional `gens ...` and `rel ...`. Generators are inferred when no gens line is given.
LinkData parse_link(std::string_view text, std::string_view source_name = {});

// Longitudes as words in the free group on the meridians, correct modulo the
// (q+1)-st lower central term. Throws IncompleteConjugationTable.
std::vector<Word> wirtinger_rewrite(const LinkData& l, int q);

struct MuBar {
    Integer value;  // reduced into [0, delta) when delta > 0
    Integer delta;
    Integer raw;    // unreduced Magnus coefficient
};

// 1-based multi-index (i_1, ..., i_k), k >= 2.
MuBar mu_bar(const LinkData& l, const std::vector<int>& index);

struct MilnorTable {
    int m = 0;
    int maxlen = 0;
    std::map<std::vector<int>, MuBar> entries;  // ordered by length, then lexicographically in rows()
    std::vector<std::vector<int>> rows() const;
    std::string csv() const;
};

MilnorTable mu_table(const LinkData& l, int maxlen);

std::string format_multi_index(const std::vector<int>& index);

}  // namespace gslab
