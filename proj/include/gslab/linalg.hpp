#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace gslab {

using Integer = mpz_class;
using Rational = mpq_class;

// Sorted sparse vector of nonzero rationals.
class SparseVector {
public:
    struct Entry {
        std::uint32_t index;
        Rational value;
    };

    SparseVector() = default;
    static SparseVector unit(std::uint32_t index, const Rational& value = 1);
    static SparseVector from_dense(const std::vector<Rational>& dense);

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }
    std::size_t nnz() const noexcept { return entries_.size(); }
    Rational at(std::uint32_t index) const;
    const Entry& leading() const { return entries_.front(); }

    // Appends an entry; indices must be strictly increasing.
    void push_back(std::uint32_t index, Rational value);

    // this += c * other
    void add_scaled(const SparseVector& other, const Rational& c);
    void scale(const Rational& c);
    std::vector<Rational> to_dense(std::size_t dim) const;

    friend bool operator==(const SparseVector& a, const SparseVector& b);

private:
    std::vector<Entry> entries_;
};

// Row-echelon basis of a subspace of Q^n; pivots normalized to 1.
class EchelonBasis {
public:
    explicit EchelonBasis(bool track_combinations = false) : track_(track_combinations) {}

    // Inserts v; returns true iff the dimension grew.
    bool insert(const SparseVector& v);
    // With tracking on: inserts v and, if v was dependent, returns the relation
    // (coefficients over inserted vectors, including v itself) that it satisfies.
    std::optional<SparseVector> insert_or_relation(const SparseVector& v);
    // Normal form of v: zero in every pivot column.
    SparseVector reduce(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }

    // With tracking on, expresses v in terms of the inserted vectors (by insertion
    // order, counting rejected ones). Returns nullopt if v is not in the span.
    std::optional<SparseVector> coordinates(const SparseVector& v) const;

    std::size_t dimension() const noexcept { return rows_.size(); }
    std::size_t inserted() const noexcept { return inserted_; }
    // Pivot columns in ascending order.
    std::vector<std::uint32_t> pivots() const;
    bool has_pivot(std::uint32_t column) const { return pivot_row_.count(column) != 0; }
    const SparseVector& row_for_pivot(std::uint32_t column) const;

private:
    struct Row {
        SparseVector vec;
        SparseVector combo;  // vec = sum combo_i * inserted_i
    };
    // Reduces in place; combo accumulates the subtracted multiples.
    void reduce_in_place(SparseVector& v, SparseVector* combo) const;

    bool track_;
    std::size_t inserted_ = 0;
    std::vector<Row> rows_;
    std::map<std::uint32_t, std::size_t> pivot_row_;
};

// Dense rational matrix, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    SparseVector row(std::size_t r) const;
    QMatrix transpose() const;
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::size_t rank(const QMatrix& m);
// Rank of the row space spanned by the given vectors.
std::size_t rank(const std::vector<SparseVector>& rows);

}  // namespace gslab
