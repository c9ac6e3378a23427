#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gslab/linalg.hpp"

namespace gslab {

inline constexpr int kMaxLaurentVariables = 8;
using Exponent = std::array<std::int32_t, kMaxLaurentVariables>;

// Element of Q[t_1^±1, ..., t_b^±1]. Terms are kept in lex order of exponents,
// zero coefficients never stored.
class LaurentPoly {
public:
    explicit LaurentPoly(int nvars = 0);
    LaurentPoly(int nvars, const Rational& constant);

    static LaurentPoly monomial(int nvars, const Exponent& e, const Rational& coeff = 1);
    // t_i (0-based i)
    static LaurentPoly variable(int nvars, int i);
    // t^e - 1 for an exponent vector given as integers.
    static LaurentPoly unit_minus_one(int nvars, const std::vector<std::int64_t>& e);

    int nvars() const noexcept { return nvars_; }
    const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    // Single-term elements are exactly the units of the ring.
    bool is_unit() const noexcept { return terms_.size() == 1; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    // max minus min of the total degree over terms.
    std::int64_t degree_span() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // Inverse of a unit (single term); throws otherwise.
    LaurentPoly unit_inverse() const;
    // Exact quotient if d divides this, else nullopt.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    // Image under t_i -> 1.
    Rational augmentation() const;

    std::string to_string() const;

private:
    void check_vars(const LaurentPoly& o) const;

    int nvars_;
    std::map<Exponent, Rational> terms_;
};

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q);

// Grammar: sum of terms like `3*t1^2*t2^-1`, `-1/2*t1`, `7`; `t` means t1.
LaurentPoly parse_laurent(std::string_view text, int nvars);

class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(std::size_t rows, std::size_t cols, int nvars);

    static LaurentMatrix identity(std::size_t n, int nvars);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    int nvars() const noexcept { return nvars_; }
    LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    LaurentMatrix transpose() const;
    LaurentMatrix submatrix(const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) const;
    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
    friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

    void scale(const LaurentPoly& c);
    QMatrix evaluate(const std::vector<Rational>& point) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    int nvars_ = 0;
    std::vector<LaurentPoly> data_;
};

// Fraction-free elimination record: the leading rank x rank minor of
// M[row_order, col_order] is nonsingular.
struct BareissTrace {
    std::size_t rank = 0;
    std::vector<std::size_t> row_order;
    std::vector<std::size_t> col_order;
    LaurentPoly last_pivot;  // equals that minor up to sign
};

// Pivot: units first, then smallest degree span, fewest terms, lowest row, lowest column.
BareissTrace bareiss(const LaurentMatrix& m);
std::size_t bareiss_rank(const LaurentMatrix& m);
// Dimension of the left kernel {v : v M = 0} over the fraction field.
std::size_t kernel_rank(const LaurentMatrix& m);
LaurentPoly determinant(const LaurentMatrix& m);
// Evaluation at t_i = 1.
QMatrix augment(const LaurentMatrix& m);

// Basis of the left kernel over the fraction field with Laurent-polynomial entries
// (rows of the returned matrix), built from adjugates of a maximal nonsingular minor.
LaurentMatrix left_kernel_basis(const LaurentMatrix& m);

// Finds F and a nonzero c with F * m = c * rhs, if rows of rhs lie in the
// rational row space of m.
struct ScaledSolution {
    LaurentMatrix solution;
    LaurentPoly scale;
};
std::optional<ScaledSolution> solve_left_scaled(const LaurentMatrix& m, const LaurentMatrix& rhs);

// Rank over Q after substituting a random point with nonzero integer coordinates;
// maximum over the given number of attempts. Never exceeds bareiss_rank.
std::size_t sampled_rank(const LaurentMatrix& m, std::mt19937_64& rng, int attempts);

std::string format_matrix(const LaurentMatrix& m);

}  // namespace gslab
