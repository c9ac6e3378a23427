#pragma once

#include <string>
#include <vector>

#include "gslab/linalg.hpp"

namespace gslab {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    // col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void negate_row(std::size_t r);

    QMatrix to_rational() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

struct SnfResult {
    IntMatrix U;  // rows x rows, unimodular
    IntMatrix D;  // rows x cols, diagonal d_1 | d_2 | ...
    IntMatrix V;  // cols x cols, unimodular
    // min(rows, cols) entries; zero factors trail.
    std::vector<Integer> invariant_factors;
};

// U * A * V = D. Pivot: smallest nonzero |entry|, ties to lowest row then column.
SnfResult smith_normal_form(const IntMatrix& a);

// Rank over Q by fraction-free elimination.
std::size_t rational_rank(const IntMatrix& a);

// Determinant of a square matrix (Bareiss).
Integer determinant(const IntMatrix& a);

std::string format_matrix(const IntMatrix& a);

}  // namespace gslab
