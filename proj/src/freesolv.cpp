#include "gslab/freesolv.hpp"

#include <string>

#include "gslab/abelian.hpp"
#include "gslab/error.hpp"
#include "gslab/integer_matrix.hpp"

namespace gslab {

SubsetSpec parse_subset(std::string_view text, const Presentation& ambient, std::string_view source_name)
{
    SubsetSpec s;
    s.ambient = ambient;
    std::size_t start = 0;
    int line = 0;
    while (start <= text.size()) {
        ++line;
        auto end = text.find('\n', start);
        std::string_view l = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        if (auto h = l.find('#'); h != std::string_view::npos)
            l = l.substr(0, h);
        if (l.find_first_not_of(" \t\r") != std::string_view::npos) {
            try {
                s.elements.push_back(parse_word(l, ambient));
            } catch (const ParseError& e) {
                throw ParseError(e.kind(), e.message(), line, e.column(), std::string(source_name));
            }
        }
        if (end == std::string_view::npos)
            break;
        start = end + 1;
    }
    if (s.elements.empty())
        throw ParseError(ErrorKind::Syntax, "no elements given", 0, 0, std::string(source_name));
    return s;
}

GroupHom subset_hom(const SubsetSpec& s)
{
    GroupHom h;
    h.source = Presentation::free_group(static_cast<int>(s.elements.size()));
    h.target = s.ambient;
    h.images = s.elements;
    return h;
}

FreeSolvableReport freesolvable_hypotheses(const SubsetSpec& s, int n, bool assume_h2)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "derived length must be >= 1");
    FreeSolvableReport rep;
    rep.n = n;
    rep.elements = static_cast<int>(s.elements.size());
    const GroupHom h = subset_hom(s);
    rep.h1_rank = induced_h1_rational(h).image_dim;
    rep.independent = rep.h1_rank == rep.elements;
    rep.h2_hypothesis = assume_h2 ? Hypothesis{HypothesisStatus::Assumed, "H2 spanned by surface classes (asserted)"}
                                  : Hypothesis{HypothesisStatus::Unknown, "no certificate format for the H2 hypothesis"};
    if (h2_complex_dim(s.ambient) == 0)
        rep.h2_hypothesis = {HypothesisStatus::Verified, "ambient presentation complex has no rational 2-cycles"};
    rep.hypotheses_hold = rep.independent && rep.h2_hypothesis.holds();
    if (n == 2)
        rep.probe = metabelian_mono_certificate(h);
    return rep;
}

}  // namespace gslab
