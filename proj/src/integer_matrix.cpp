#include "gslab/integer_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gslab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k)
{
    if (k == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k)
{
    if (k == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r)
{
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

QMatrix IntMatrix::to_rational() const
{
    QMatrix q(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            q(r, c) = Rational((*this)(r, c));
    return q;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("IntMatrix product: shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

namespace {

// Smallest nonzero |entry| in the lower-right block starting at t.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc)
{
    bool found = false;
    Integer best;
    for (std::size_t r = t; r < d.rows(); ++r)
        for (std::size_t c = t; c < d.cols(); ++c) {
            if (d(r, c) == 0)
                continue;
            Integer v = abs(d(r, c));
            if (!found || v < best) {
                found = true;
                best = v;
                pr = r;
                pc = c;
            }
        }
    return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pr = 0, pc = 0;
        if (!find_pivot(d, t, pr, pc))
            break;
        for (;;) {
            d.swap_rows(t, pr);
            u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            v.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < m; ++r) {
                if (d(r, t) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), d(r, t).get_mpz_t(), d(t, t).get_mpz_t());
                d.add_row_multiple(r, t, -q);
                u.add_row_multiple(r, t, -q);
                if (d(r, t) != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (d(t, c) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), d(t, c).get_mpz_t(), d(t, t).get_mpz_t());
                d.add_col_multiple(c, t, -q);
                v.add_col_multiple(c, t, -q);
                if (d(t, c) != 0)
                    clean = false;
            }
            if (clean) {
                // Divisibility: the pivot must divide the remaining block.
                bool divides = true;
                for (std::size_t r = t + 1; r < m && divides; ++r)
                    for (std::size_t c = t + 1; c < n; ++c)
                        if (!mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t())) {
                            d.add_row_multiple(t, r, 1);
                            u.add_row_multiple(t, r, 1);
                            divides = false;
                            break;
                        }
                if (divides)
                    break;
            }
            // Restart with the smallest entry in row t / column t.
            pr = t;
            pc = t;
            Integer best = abs(d(t, t));
            for (std::size_t r = t; r < m; ++r)
                if (d(r, t) != 0 && (best == 0 || abs(d(r, t)) < best)) {
                    best = abs(d(r, t));
                    pr = r;
                    pc = t;
                }
            for (std::size_t c = t; c < n; ++c)
                if (d(t, c) != 0 && (best == 0 || abs(d(t, c)) < best)) {
                    best = abs(d(t, c));
                    pr = t;
                    pc = c;
                }
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    SnfResult res{std::move(u), std::move(d), std::move(v), {}};
    for (std::size_t t = 0; t < steps; ++t)
        res.invariant_factors.push_back(res.D(t, t));
    return res;
}

std::size_t rational_rank(const IntMatrix& a)
{
    IntMatrix w = a;
    const std::size_t m = w.rows();
    const std::size_t n = w.cols();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t p = rank;
        while (p < m && w(p, c) == 0)
            ++p;
        if (p == m)
            continue;
        w.swap_rows(rank, p);
        for (std::size_t r = rank + 1; r < m; ++r) {
            for (std::size_t j = c + 1; j < n; ++j) {
                Integer num = w(rank, c) * w(r, j) - w(r, c) * w(rank, j);
                mpz_divexact(w(r, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w(r, c) = 0;
        }
        prev = w(rank, c);
        ++rank;
    }
    return rank;
}

Integer determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix w = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            w.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = w(k, k) * w(i, j) - w(i, k) * w(k, j);
                mpz_divexact(w(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign * w(n - 1, n - 1);
}

std::string format_matrix(const IntMatrix& a)
{
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < a.rows(); ++r) {
        out << (r ? ", [" : "[");
        for (std::size_t c = 0; c < a.cols(); ++c)
            out << (c ? ", " : "") << a(r, c).get_str();
        out << ']';
    }
    out << ']';
    return out.str();
}

}  // namespace gslab
