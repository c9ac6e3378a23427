#pragma once

#include <cstdint>
#include <vector>

#include "gslab/linalg.hpp"
#include "gslab/presentation.hpp"

namespace gslab {

// Indexing of noncommutative monomials of length <= q over m letters: degree
// blocks in ascending order, base-m codes (first letter most significant) inside.
class WordIndex {
public:
    WordIndex() = default;
    WordIndex(int m, int q);

    int letters() const noexcept { return m_; }
    int max_degree() const noexcept { return q_; }
    std::uint32_t size() const noexcept { return offsets_.back(); }
    std::uint32_t offset(int degree) const { return offsets_.at(static_cast<std::size_t>(degree)); }
    std::uint32_t block_size(int degree) const { return powers_.at(static_cast<std::size_t>(degree)); }
    int degree_of(std::uint32_t index) const;
    std::uint32_t index(int degree, std::uint32_t code) const { return offset(degree) + code; }
    // Index of the concatenation of two monomials.
    std::uint32_t concat(int da, std::uint32_t ca, int db, std::uint32_t cb) const;
    std::uint32_t code_of(const std::vector<int>& letters) const;
    std::vector<int> letters_of(int degree, std::uint32_t code) const;

private:
    int m_ = 0;
    int q_ = 0;
    std::vector<std::uint32_t> powers_;   // m^k
    std::vector<std::uint32_t> offsets_;  // start of degree-k block; back() = total
};

// Element of Q<<X_1..X_m>> / (degree > q).
class TruncatedElement {
public:
    TruncatedElement() = default;
    TruncatedElement(int m, int q);

    static TruncatedElement one(int m, int q);
    // 1 + X_i
    static TruncatedElement magnus_generator(int m, int q, int i);
    // (1 + X_i)^e by the binomial series.
    static TruncatedElement magnus_power(int m, int q, int i, std::int64_t e);

    const WordIndex& index() const noexcept { return index_; }
    int letters() const noexcept { return index_.letters(); }
    int max_degree() const noexcept { return index_.max_degree(); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    const Rational& constant_term() const { return coeffs_.front(); }
    // Coefficient of X_{w[0]} X_{w[1]} ... (0-based letters).
    const Rational& coefficient(const std::vector<int>& word) const;

    TruncatedElement& operator+=(const TruncatedElement& o);
    TruncatedElement& operator-=(const TruncatedElement& o);
    friend TruncatedElement operator+(TruncatedElement a, const TruncatedElement& b) { return a += b; }
    friend TruncatedElement operator-(TruncatedElement a, const TruncatedElement& b) { return a -= b; }
    friend TruncatedElement operator*(const TruncatedElement& a, const TruncatedElement& b);
    friend bool operator==(const TruncatedElement& a, const TruncatedElement& b)
    {
        return a.index_.letters() == b.index_.letters() && a.index_.max_degree() == b.index_.max_degree() &&
               a.coeffs_ == b.coeffs_;
    }

    SparseVector to_sparse() const { return SparseVector::from_dense(coeffs_); }

private:
    WordIndex index_;
    std::vector<Rational> coeffs_;
};

// Magnus expansion x_i -> 1 + X_i truncated above degree q.
TruncatedElement magnus_image(const Word& w, int m, int q);

}  // namespace gslab
