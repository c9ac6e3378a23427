#include "gslab/lie.hpp"

#include <map>
#include <string>

#include "gslab/error.hpp"

namespace gslab {

namespace {

SparseVector from_map(const std::map<std::uint32_t, Rational>& acc)
{
    SparseVector r;
    for (const auto& [i, c] : acc)
        if (c != 0)
            r.push_back(i, c);
    return r;
}

SparseVector negated(const SparseVector& v)
{
    SparseVector r = v;
    r.scale(-1);
    return r;
}

// Index of e_i ^ e_j (i < j) among the pairs of an n-dimensional space.
std::uint32_t pair_index(int n, int i, int j)
{
    return static_cast<std::uint32_t>(i * n - i * (i + 1) / 2 + (j - i - 1));
}

// Adds c * (e_a ^ e_b) to acc.
void add_wedge(std::map<std::uint32_t, Rational>& acc, int n, int a, int b, const Rational& c)
{
    if (a == b || c == 0)
        return;
    if (a < b)
        acc[pair_index(n, a, b)] += c;
    else
        acc[pair_index(n, b, a)] -= c;
}

// d3(e_i ^ e_j ^ e_k) over the pair basis of Lambda^2 of an n-dimensional L.
SparseVector d3_row(const GradedLie& l, int n, int i, int j, int k)
{
    std::map<std::uint32_t, Rational> acc;
    for (const auto& e : l.bracket(i, j).entries())
        add_wedge(acc, n, static_cast<int>(e.index), k, e.value);
    for (const auto& e : l.bracket(i, k).entries())
        add_wedge(acc, n, static_cast<int>(e.index), j, -e.value);
    for (const auto& e : l.bracket(j, k).entries())
        add_wedge(acc, n, static_cast<int>(e.index), i, e.value);
    return from_map(acc);
}

}  // namespace

GradedLie GradedLie::from_structure(std::vector<int> dims, std::vector<std::string> labels,
                                    const std::vector<std::vector<SparseVector>>& table)
{
    GradedLie g;
    g.dims_ = std::move(dims);
    for (std::size_t k = 0; k < g.dims_.size(); ++k) {
        if (g.dims_[k] < 0)
            throw Error(ErrorKind::InvalidArgument, "negative graded dimension");
        for (int r = 0; r < g.dims_[k]; ++r)
            g.degree_.push_back(static_cast<int>(k) + 1);
    }
    const int n = g.dimension();
    if (labels.empty())
        for (int i = 0; i < n; ++i)
            labels.push_back("e" + std::to_string(i + 1));
    if (static_cast<int>(labels.size()) != n)
        throw Error(ErrorKind::InvalidArgument, "label count does not match the dimension");
    g.labels_ = std::move(labels);
    g.table_.assign(static_cast<std::size_t>(n), std::vector<SparseVector>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SparseVector v;
            if (static_cast<std::size_t>(i) < table.size() && static_cast<std::size_t>(j) < table[i].size())
                v = table[i][j];
            const int d = g.degree_[i] + g.degree_[j];
            for (const auto& e : v.entries())
                if (static_cast<int>(e.index) >= n || g.degree_[e.index] != d)
                    throw Error(ErrorKind::InvalidArgument,
                                "bracket of e" + std::to_string(i + 1) + " and e" + std::to_string(j + 1) +
                                    " is not homogeneous of degree " + std::to_string(d));
            g.table_[j][i] = negated(v);
            g.table_[i][j] = std::move(v);
        }
    return g;
}

GradedLie GradedLie::abelian(int dim)
{
    return from_structure({dim}, {}, {});
}

int GradedLie::dim(int degree) const
{
    if (degree < 1 || degree > top_degree())
        return 0;
    return dims_[static_cast<std::size_t>(degree) - 1];
}

int GradedLie::offset(int degree) const
{
    int o = 0;
    for (int k = 1; k < degree && k <= top_degree(); ++k)
        o += dims_[static_cast<std::size_t>(k) - 1];
    return o;
}

const SparseVector& GradedLie::bracket(int i, int j) const
{
    return table_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
}

SparseVector GradedLie::bracket(const SparseVector& u, const SparseVector& v) const
{
    SparseVector r;
    for (const auto& a : u.entries())
        for (const auto& b : v.entries())
            r.add_scaled(bracket(static_cast<int>(a.index), static_cast<int>(b.index)), a.value * b.value);
    return r;
}

GradedLie GradedLie::truncate(int c) const
{
    if (c >= top_degree())
        return *this;
    GradedLie g;
    g.dims_.assign(dims_.begin(), dims_.begin() + std::max(c, 0));
    const int n = offset(c + 1);
    g.degree_.assign(degree_.begin(), degree_.begin() + n);
    g.labels_.assign(labels_.begin(), labels_.begin() + n);
    g.table_.assign(static_cast<std::size_t>(n), std::vector<SparseVector>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (degree_[i] + degree_[j] <= c)
                g.table_[i][j] = table_[i][j];
    return g;
}

bool GradedLie::antisymmetric() const
{
    const int n = dimension();
    for (int i = 0; i < n; ++i) {
        if (!bracket(i, i).is_zero())
            return false;
        for (int j = i + 1; j < n; ++j)
            if (!(bracket(i, j) == negated(bracket(j, i))))
                return false;
    }
    return true;
}

bool GradedLie::jacobi(int* fi, int* fj, int* fk) const
{
    const int n = dimension();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                if (degree_[i] + degree_[j] + degree_[k] > top_degree())
                    continue;
                SparseVector s = bracket(bracket(i, j), SparseVector::unit(static_cast<std::uint32_t>(k)));
                s.add_scaled(bracket(bracket(j, k), SparseVector::unit(static_cast<std::uint32_t>(i))), 1);
                s.add_scaled(bracket(bracket(k, i), SparseVector::unit(static_cast<std::uint32_t>(j))), 1);
                if (!s.is_zero()) {
                    if (fi)
                        *fi = i;
                    if (fj)
                        *fj = j;
                    if (fk)
                        *fk = k;
                    return false;
                }
            }
    return true;
}

SparseVector LieModel::lie_coordinates(const SparseVector& v, int k) const
{
    if (k < 1 || k > lie.top_degree())
        throw Error(ErrorKind::InvalidArgument, "degree outside the Lie model");
    const auto coords = spans[static_cast<std::size_t>(k) - 1].coordinates(v);
    if (!coords)
        throw Error(ErrorKind::DimensionMismatch,
                    "degree-" + std::to_string(k) + " element is not in the span of the bracket basis");
    SparseVector out;
    const auto off = static_cast<std::uint32_t>(lie.offset(k));
    for (const auto& e : coords->entries())
        out.push_back(e.index + off, e.value);
    return out;
}

LieModel extract_graded_lie(const NilpotentQuotientData& nqd, int c)
{
    if (c < 1 || c > nqd.q)
        throw Error(ErrorKind::InvalidArgument,
                    "Lie class " + std::to_string(c) + " needs truncation degree >= " + std::to_string(c));
    const WordIndex& ix = nqd.index;
    const int m = nqd.letters();
    LieModel model;
    std::vector<int> dims;
    std::vector<std::string> labels;
    std::vector<int> degree;

    auto add = [&](SparseVector nf, int k, std::string label, int parent, int gen) {
        EchelonBasis& span = model.spans[static_cast<std::size_t>(k) - 1];
        if (nf.is_zero() || span.contains(nf))
            return;
        span.insert(nf);
        model.elements.push_back(std::move(nf));
        model.parent.push_back(parent);
        model.generator.push_back(gen);
        labels.push_back(std::move(label));
        degree.push_back(k);
        ++dims.back();
    };

    for (int k = 1; k <= c; ++k) {
        model.spans.emplace_back(true);
        dims.push_back(0);
        if (k == 1) {
            for (int i = 0; i < m; ++i)
                add(nqd.graded_normal_form(SparseVector::unit(static_cast<std::uint32_t>(i)), 1), 1,
                    nqd.presentation.generators[static_cast<std::size_t>(i)], -1, i);
        } else {
            const int prev_begin = static_cast<int>(model.elements.size()) - dims[dims.size() - 2];
            const int prev_end = static_cast<int>(model.elements.size());
            for (int p = prev_begin; p < prev_end; ++p)
                for (int g = 0; g < dims[0]; ++g) {
                    const SparseVector& u = model.elements[static_cast<std::size_t>(p)];
                    const SparseVector& x = model.elements[static_cast<std::size_t>(g)];
                    SparseVector w = graded_product(ix, u, k - 1, x, 1);
                    w.add_scaled(graded_product(ix, x, 1, u, k - 1), -1);
                    add(nqd.graded_normal_form(w, k), k, "[" + labels[p] + "," + labels[g] + "]", p, g);
                }
        }
        if (dims.back() != nqd.l[static_cast<std::size_t>(k) - 1])
            throw Error(ErrorKind::DimensionMismatch,
                        "bracket span in degree " + std::to_string(k) + " has dimension " +
                            std::to_string(dims.back()) + ", expected " +
                            std::to_string(nqd.l[static_cast<std::size_t>(k) - 1]));
    }

    // Structure constants from commutators in gr QG.
    const int n = static_cast<int>(model.elements.size());
    std::vector<std::vector<SparseVector>> table(static_cast<std::size_t>(n),
                                                 std::vector<SparseVector>(static_cast<std::size_t>(n)));
    model.lie = GradedLie::from_structure(dims, labels, {});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int k = degree[i] + degree[j];
            if (k > c)
                continue;
            const SparseVector& u = model.elements[static_cast<std::size_t>(i)];
            const SparseVector& v = model.elements[static_cast<std::size_t>(j)];
            SparseVector w = graded_product(ix, u, degree[i], v, degree[j]);
            w.add_scaled(graded_product(ix, v, degree[j], u, degree[i]), -1);
            table[i][j] = model.lie_coordinates(nqd.graded_normal_form(w, k), k);
        }
    model.lie = GradedLie::from_structure(std::move(dims), std::move(labels), table);
    return model;
}

CEReport ce_h1_h2(const GradedLie& l)
{
    const int n = l.dimension();
    CEReport rep;
    rep.dim_l = n;
    rep.dim_wedge2 = static_cast<std::int64_t>(n) * (n - 1) / 2;
    rep.dim_wedge3 = static_cast<std::int64_t>(n) * (n - 1) * (n - 2) / 6;

    EchelonBasis d2;
    std::vector<const SparseVector*> pair_image;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            pair_image.push_back(&l.bracket(i, j));
            d2.insert(l.bracket(i, j));
        }
    rep.rank_d2 = static_cast<int>(d2.dimension());

    EchelonBasis d3;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                SparseVector row = d3_row(l, n, i, j, k);
                if (row.is_zero())
                    continue;
                SparseVector back;
                for (const auto& e : row.entries())
                    back.add_scaled(*pair_image[e.index], e.value);
                if (!back.is_zero())
                    rep.boundary_squared_zero = false;
                d3.insert(row);
            }
    rep.rank_d3 = static_cast<int>(d3.dimension());
    rep.h1 = n - rep.rank_d2;
    rep.h2 = static_cast<int>(rep.dim_wedge2 - rep.rank_d2 - rep.rank_d3);
    return rep;
}

std::vector<QMatrix> induced_lie_maps(const GroupHom& h, const LieModel& source, const LieModel& target,
                                      const NilpotentQuotientData& target_nqd, int c)
{
    if (c > source.lie.top_degree() || c > target.lie.top_degree())
        throw Error(ErrorKind::InvalidArgument, "Lie models are truncated below the requested degree");
    const int mt = h.target.rank();
    // Degree-1 class of each source generator's image.
    std::vector<SparseVector> gen_image;
    for (const auto& w : h.images) {
        const auto sums = w.exponent_sums(mt);
        SparseVector v;
        for (int j = 0; j < mt; ++j)
            v.push_back(static_cast<std::uint32_t>(j), Rational(static_cast<long>(sums[static_cast<std::size_t>(j)])));
        gen_image.push_back(target.lie_coordinates(target_nqd.graded_normal_form(v, 1), 1));
    }
    const int n = source.lie.offset(c + 1);
    std::vector<SparseVector> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (source.parent[i] < 0)
            image[i] = gen_image.at(static_cast<std::size_t>(source.generator[i]));
        else
            image[i] = target.lie.bracket(image[source.parent[i]], image[source.generator[i]]);
    }
    std::vector<QMatrix> out;
    for (int k = 1; k <= c; ++k) {
        const int so = source.lie.offset(k);
        const int to = target.lie.offset(k);
        QMatrix mk(static_cast<std::size_t>(source.lie.dim(k)), static_cast<std::size_t>(target.lie.dim(k)));
        for (int r = 0; r < source.lie.dim(k); ++r)
            for (const auto& e : image[so + r].entries())
                mk(static_cast<std::size_t>(r), e.index - static_cast<std::uint32_t>(to)) = e.value;
        out.push_back(std::move(mk));
    }
    return out;
}

std::vector<QMatrix> induced_algebra_maps(const GroupHom& h, const NilpotentQuotientData& source,
                                          const NilpotentQuotientData& target, int c)
{
    if (c > source.q || c > target.q)
        throw Error(ErrorKind::InvalidArgument, "truncated quotients are below the requested degree");
    const int mt = h.target.rank();
    const WordIndex& tix = target.index;
    std::vector<SparseVector> linear;
    for (const auto& w : h.images) {
        const auto sums = w.exponent_sums(mt);
        SparseVector v;
        for (int j = 0; j < mt; ++j)
            v.push_back(static_cast<std::uint32_t>(j), Rational(static_cast<long>(sums[static_cast<std::size_t>(j)])));
        linear.push_back(std::move(v));
    }
    std::vector<QMatrix> out;
    for (int k = 1; k <= c; ++k) {
        const auto src_std = source.standard_monomials(k);
        const auto tgt_std = target.standard_monomials(k);
        std::map<std::uint32_t, std::size_t> column;
        for (std::size_t i = 0; i < tgt_std.size(); ++i)
            column[tgt_std[i]] = i;
        QMatrix mk(src_std.size(), tgt_std.size());
        for (std::size_t r = 0; r < src_std.size(); ++r) {
            const auto letters = source.index.letters_of(k, src_std[r]);
            SparseVector img = linear.at(static_cast<std::size_t>(letters[0]));
            for (std::size_t t = 1; t < letters.size(); ++t)
                img = graded_product(tix, img, static_cast<int>(t), linear.at(static_cast<std::size_t>(letters[t])), 1);
            img = target.graded_normal_form(img, k);
            for (const auto& e : img.entries())
                mk(r, column.at(e.index)) = e.value;
        }
        out.push_back(std::move(mk));
    }
    return out;
}

DwyerSpaces dwyer_spaces(const GradedLie& l, int n)
{
    if (n < 2 || l.top_degree() < n)
        throw Error(ErrorKind::InvalidArgument, "Dwyer spaces need n >= 2 and a Lie model through degree n");
    const GradedLie full = l.truncate(n);
    const GradedLie low = l.truncate(n - 1);
    const int d = low.dimension();
    DwyerSpaces out;
    out.n = n;
    EchelonBasis images(true);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            out.pairs.emplace_back(i, j);
            if (auto rel = images.insert_or_relation(full.bracket(i, j)))
                out.kernel.push_back(std::move(*rel));
        }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                SparseVector row = d3_row(low, d, i, j, k);
                if (!row.is_zero())
                    out.boundaries.push_back(std::move(row));
            }
    return out;
}

std::int64_t dwyer_quotient_dim(const Presentation& p, int n)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "Dwyer quotient dimension needs n >= 2");
    const NilpotentQuotientData nqd = truncated_quotient(p, n);
    const LieModel model = extract_graded_lie(nqd, n - 1);
    const CEReport ce = ce_h1_h2(model.lie);
    const std::int64_t r = ce.h2 - nqd.l[static_cast<std::size_t>(n) - 1];
    if (r < 0)
        throw Error(ErrorKind::NegativeDimension,
                    "H2 of the class-" + std::to_string(n - 1) + " model is smaller than l_" + std::to_string(n));
    return r;
}

std::int64_t dwyer_quotient_dim_crosscheck(const Presentation& p, int n)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "Dwyer quotient dimension needs n >= 2");
    const NilpotentQuotientData nqd = truncated_quotient(p, n);
    const LieModel model = extract_graded_lie(nqd, n);
    const DwyerSpaces sp = dwyer_spaces(model.lie, n);
    const std::int64_t r = static_cast<std::int64_t>(sp.kernel.size()) - static_cast<std::int64_t>(rank(sp.boundaries));
    if (r < 0)
        throw Error(ErrorKind::NegativeDimension, "boundaries exceed the bracket kernel");
    return r;
}

}  // namespace gslab
