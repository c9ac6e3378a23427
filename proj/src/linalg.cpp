#include "gslab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gslab {

SparseVector SparseVector::unit(std::uint32_t index, const Rational& value)
{
    SparseVector v;
    if (value != 0)
        v.entries_.push_back({index, value});
    return v;
}

SparseVector SparseVector::from_dense(const std::vector<Rational>& dense)
{
    SparseVector v;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0)
            v.entries_.push_back({static_cast<std::uint32_t>(i), dense[i]});
    return v;
}

Rational SparseVector::at(std::uint32_t index) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::uint32_t i) { return e.index < i; });
    if (it != entries_.end() && it->index == index)
        return it->value;
    return 0;
}

void SparseVector::push_back(std::uint32_t index, Rational value)
{
    if (value == 0)
        return;
    if (!entries_.empty() && entries_.back().index >= index)
        throw std::logic_error("SparseVector::push_back: indices out of order");
    entries_.push_back({index, std::move(value)});
}

void SparseVector::add_scaled(const SparseVector& other, const Rational& c)
{
    if (c == 0 || other.entries_.empty())
        return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == entries_.end() || b->index < a->index) {
            out.push_back({b->index, c * b->value});
            ++b;
        } else {
            Rational s = a->value + c * b->value;
            if (s != 0)
                out.push_back({a->index, std::move(s)});
            ++a;
            ++b;
        }
    }
    entries_ = std::move(out);
}

void SparseVector::scale(const Rational& c)
{
    if (c == 0) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_)
        e.value *= c;
}

std::vector<Rational> SparseVector::to_dense(std::size_t dim) const
{
    std::vector<Rational> out(dim);
    for (const auto& e : entries_)
        out.at(e.index) = e.value;
    return out;
}

bool operator==(const SparseVector& a, const SparseVector& b)
{
    if (a.entries_.size() != b.entries_.size())
        return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        if (a.entries_[i].index != b.entries_[i].index || a.entries_[i].value != b.entries_[i].value)
            return false;
    return true;
}

void EchelonBasis::reduce_in_place(SparseVector& v, SparseVector* combo) const
{
    std::uint32_t cursor = 0;
    for (;;) {
        const auto& es = v.entries();
        auto it = std::find_if(es.begin(), es.end(), [&](const SparseVector::Entry& e) {
            return e.index >= cursor && pivot_row_.count(e.index);
        });
        if (it == es.end())
            return;
        const std::uint32_t col = it->index;
        const Rational c = it->value;
        const Row& row = rows_[pivot_row_.at(col)];
        v.add_scaled(row.vec, -c);
        if (combo)
            combo->add_scaled(row.combo, c);
        cursor = col + 1;
    }
}

SparseVector EchelonBasis::reduce(const SparseVector& v) const
{
    SparseVector r = v;
    reduce_in_place(r, nullptr);
    return r;
}

bool EchelonBasis::insert(const SparseVector& v)
{
    const std::uint32_t id = static_cast<std::uint32_t>(inserted_++);
    SparseVector r = v;
    SparseVector combo;
    reduce_in_place(r, track_ ? &combo : nullptr);
    if (r.is_zero())
        return false;
    // r = v - combo_used, so r expressed in inserted vectors is e_id - combo.
    SparseVector expr;
    if (track_) {
        expr = SparseVector::unit(id, 1);
        expr.add_scaled(combo, -1);
    }
    const Rational inv = 1 / r.leading().value;
    r.scale(inv);
    expr.scale(inv);
    pivot_row_[r.leading().index] = rows_.size();
    rows_.push_back({std::move(r), std::move(expr)});
    return true;
}

std::optional<SparseVector> EchelonBasis::insert_or_relation(const SparseVector& v)
{
    if (!track_)
        throw std::logic_error("EchelonBasis::insert_or_relation requires tracking");
    const std::uint32_t id = static_cast<std::uint32_t>(inserted_);
    SparseVector combo;
    SparseVector r = v;
    reduce_in_place(r, &combo);
    if (!r.is_zero()) {
        insert(v);
        return std::nullopt;
    }
    ++inserted_;
    // v - sum combo_i * inserted_i = 0
    SparseVector rel = SparseVector::unit(id, 1);
    rel.add_scaled(combo, -1);
    return rel;
}

std::optional<SparseVector> EchelonBasis::coordinates(const SparseVector& v) const
{
    if (!track_)
        throw std::logic_error("EchelonBasis::coordinates requires tracking");
    SparseVector r = v;
    SparseVector combo;
    reduce_in_place(r, &combo);
    if (!r.is_zero())
        return std::nullopt;
    return combo;
}

std::vector<std::uint32_t> EchelonBasis::pivots() const
{
    std::vector<std::uint32_t> out;
    out.reserve(pivot_row_.size());
    for (const auto& [col, _] : pivot_row_)
        out.push_back(col);
    return out;
}

const SparseVector& EchelonBasis::row_for_pivot(std::uint32_t column) const
{
    return rows_.at(pivot_row_.at(column)).vec;
}

SparseVector QMatrix::row(std::size_t r) const
{
    SparseVector v;
    for (std::size_t c = 0; c < cols_; ++c)
        v.push_back(static_cast<std::uint32_t>(c), (*this)(r, c));
    return v;
}

QMatrix QMatrix::transpose() const
{
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("QMatrix product: shape mismatch");
    QMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

std::size_t rank(const QMatrix& m)
{
    EchelonBasis basis;
    for (std::size_t r = 0; r < m.rows(); ++r)
        basis.insert(m.row(r));
    return basis.dimension();
}

std::size_t rank(const std::vector<SparseVector>& rows)
{
    EchelonBasis basis;
    for (const auto& r : rows)
        basis.insert(r);
    return basis.dimension();
}

}  // namespace gslab
