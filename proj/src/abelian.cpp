#include "gslab/abelian.hpp"

#include <sstream>

namespace gslab {

IntMatrix relation_matrix(const Presentation& p)
{
    const std::size_t m = p.generators.size();
    IntMatrix r(p.relators.size(), m);
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        auto sums = p.relators[i].exponent_sums(p.rank());
        for (std::size_t j = 0; j < m; ++j)
            r(i, j) = Integer(static_cast<long>(sums[j]));
    }
    return r;
}

AbelianizationData abelianization(const Presentation& p)
{
    AbelianizationData ab;
    ab.relation_matrix = relation_matrix(p);
    const std::size_t m = p.generators.size();
    const SnfResult snf = smith_normal_form(ab.relation_matrix);

    // Row j of V^{-1} is the j-th new basis vector, and e_i = sum_j V(i,j) f_j,
    // so column j of V gives the f_j-coordinates of the generators.
    std::vector<std::size_t> free_columns;
    for (std::size_t j = 0; j < m; ++j) {
        const Integer d = j < snf.invariant_factors.size() ? snf.invariant_factors[j] : Integer(0);
        if (d == 0)
            free_columns.push_back(j);
        else if (d > 1)
            ab.torsion_coefficients.push_back(d);
    }
    ab.free_rank = static_cast<int>(free_columns.size());
    ab.basis_map = IntMatrix(m, free_columns.size());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < free_columns.size(); ++k)
            ab.basis_map(i, k) = snf.V(i, free_columns[k]);
    return ab;
}

std::vector<std::int64_t> AbelianizationData::image(const Word& w) const
{
    std::vector<std::int64_t> out(static_cast<std::size_t>(free_rank), 0);
    for (const auto& l : w.letters())
        for (int k = 0; k < free_rank; ++k)
            out[static_cast<std::size_t>(k)] +=
                l.exponent * basis_map(static_cast<std::size_t>(l.gen), static_cast<std::size_t>(k)).get_si();
    return out;
}

std::string AbelianizationData::describe() const
{
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0) {
        out << "Z";
        if (free_rank > 1)
            out << '^' << free_rank;
        first = false;
    }
    for (const auto& t : torsion_coefficients) {
        out << (first ? "" : " + ") << "Z/" << t.get_str();
        first = false;
    }
    if (first)
        out << "0";
    return out.str();
}

int h1_rational_dim(const Presentation& p)
{
    return p.rank() - static_cast<int>(rational_rank(relation_matrix(p)));
}

int h2_complex_dim(const Presentation& p)
{
    return static_cast<int>(p.relators.size()) - static_cast<int>(rational_rank(relation_matrix(p)));
}

H1RationalMap induced_h1_rational(const GroupHom& h)
{
    const IntMatrix rb = relation_matrix(h.target);
    const std::size_t mb = h.target.generators.size();
    H1RationalMap out;
    out.source_dim = h1_rational_dim(h.source);
    const int rank_rb = static_cast<int>(rational_rank(rb));
    out.target_dim = static_cast<int>(mb) - rank_rb;

    // dim((rowspace E + rowspace R_B) / rowspace R_B)
    IntMatrix stacked(rb.rows() + h.images.size(), mb);
    for (std::size_t i = 0; i < rb.rows(); ++i)
        for (std::size_t j = 0; j < mb; ++j)
            stacked(i, j) = rb(i, j);
    for (std::size_t i = 0; i < h.images.size(); ++i) {
        auto sums = h.images[i].exponent_sums(h.target.rank());
        for (std::size_t j = 0; j < mb; ++j)
            stacked(rb.rows() + i, j) = Integer(static_cast<long>(sums[j]));
    }
    out.image_dim = static_cast<int>(rational_rank(stacked)) - rank_rb;
    return out;
}

}  // namespace gslab
