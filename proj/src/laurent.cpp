#include "gslab/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "gslab/error.hpp"

namespace gslab {

namespace {

Exponent zero_exponent()
{
    Exponent e{};
    e.fill(0);
    return e;
}

Exponent add(const Exponent& a, const Exponent& b)
{
    Exponent e;
    for (int i = 0; i < kMaxLaurentVariables; ++i)
        e[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
    return e;
}

Exponent sub(const Exponent& a, const Exponent& b)
{
    Exponent e;
    for (int i = 0; i < kMaxLaurentVariables; ++i)
        e[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
    return e;
}

void check_nvars(int nvars)
{
    if (nvars < 0 || nvars > kMaxLaurentVariables)
        throw Error(ErrorKind::VariableMismatch,
                    "Laurent ring supports at most " + std::to_string(kMaxLaurentVariables) + " variables");
}

}  // namespace

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

LaurentPoly::LaurentPoly(int nvars, const Rational& constant) : nvars_(nvars)
{
    check_nvars(nvars);
    if (constant != 0)
        terms_.emplace(zero_exponent(), constant);
}

LaurentPoly LaurentPoly::monomial(int nvars, const Exponent& e, const Rational& coeff)
{
    LaurentPoly p(nvars);
    for (int i = nvars; i < kMaxLaurentVariables; ++i)
        if (e[static_cast<std::size_t>(i)] != 0)
            throw Error(ErrorKind::VariableMismatch, "exponent uses a variable beyond the ring");
    if (coeff != 0)
        p.terms_.emplace(e, coeff);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i)
{
    if (i < 0 || i >= nvars)
        throw Error(ErrorKind::VariableMismatch, "variable index out of range");
    Exponent e = zero_exponent();
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(nvars, e);
}

LaurentPoly LaurentPoly::unit_minus_one(int nvars, const std::vector<std::int64_t>& ev)
{
    if (static_cast<int>(ev.size()) != nvars)
        throw Error(ErrorKind::VariableMismatch, "exponent vector length differs from variable count");
    Exponent e = zero_exponent();
    for (std::size_t i = 0; i < ev.size(); ++i)
        e[i] = static_cast<std::int32_t>(ev[i]);
    return monomial(nvars, e) - LaurentPoly(nvars, 1);
}

void LaurentPoly::check_vars(const LaurentPoly& o) const
{
    if (nvars_ != o.nvars_)
        throw Error(ErrorKind::VariableMismatch, "Laurent polynomials over different rings (" +
                                                     std::to_string(nvars_) + " vs " +
                                                     std::to_string(o.nvars_) + " variables)");
}

std::int64_t LaurentPoly::degree_span() const
{
    if (terms_.empty())
        return 0;
    std::int64_t lo = 0, hi = 0;
    bool first = true;
    for (const auto& [e, _] : terms_) {
        std::int64_t d = 0;
        for (int i = 0; i < nvars_; ++i)
            d += e[static_cast<std::size_t>(i)];
        if (first || d < lo)
            lo = d;
        if (first || d > hi)
            hi = d;
        first = false;
    }
    return hi - lo;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly p = *this;
    for (auto& [_, c] : p.terms_)
        c = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    check_vars(o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    check_vars(o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    a.check_vars(b);
    LaurentPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Rational c = ca * cb;
            auto [it, inserted] = out.terms_.emplace(add(ea, eb), c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0)
                    out.terms_.erase(it);
            }
        }
    return out;
}

LaurentPoly LaurentPoly::unit_inverse() const
{
    if (!is_unit())
        throw Error(ErrorKind::InvalidArgument, "unit_inverse of a non-unit");
    const auto& [e, c] = *terms_.begin();
    return monomial(nvars_, sub(zero_exponent(), e), 1 / c);
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const
{
    check_vars(d);
    if (d.is_zero())
        throw Error(ErrorKind::InvalidArgument, "division by zero Laurent polynomial");
    if (is_zero())
        return LaurentPoly(nvars_);
    if (d.is_unit())
        return *this * d.unit_inverse();

    // Per-variable exponent box any quotient term must lie in.
    Exponent lo{}, hi{};
    for (int i = 0; i < nvars_; ++i) {
        auto idx = static_cast<std::size_t>(i);
        std::int32_t plo = INT32_MAX, phi = INT32_MIN, dlo = INT32_MAX, dhi = INT32_MIN;
        for (const auto& [e, _] : terms_) {
            plo = std::min(plo, e[idx]);
            phi = std::max(phi, e[idx]);
        }
        for (const auto& [e, _] : d.terms_) {
            dlo = std::min(dlo, e[idx]);
            dhi = std::max(dhi, e[idx]);
        }
        lo[idx] = plo - dlo;
        hi[idx] = phi - dhi;
        if (lo[idx] > hi[idx])
            return std::nullopt;
    }

    LaurentPoly q(nvars_);
    LaurentPoly r = *this;
    const auto& [dlead_e, dlead_c] = *d.terms_.rbegin();
    while (!r.is_zero()) {
        const auto& [rlead_e, rlead_c] = *r.terms_.rbegin();
        Exponent e = sub(rlead_e, dlead_e);
        for (int i = 0; i < nvars_; ++i) {
            auto idx = static_cast<std::size_t>(i);
            if (e[idx] < lo[idx] || e[idx] > hi[idx])
                return std::nullopt;
        }
        LaurentPoly t = monomial(nvars_, e, rlead_c / dlead_c);
        r -= t * d;
        q += t;
    }
    return q;
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& point) const
{
    if (static_cast<int>(point.size()) != nvars_)
        throw Error(ErrorKind::VariableMismatch, "evaluation point has wrong dimension");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < nvars_; ++i) {
            const auto k = e[static_cast<std::size_t>(i)];
            if (k == 0)
                continue;
            const Rational& x = point[static_cast<std::size_t>(i)];
            if (x == 0)
                throw Error(ErrorKind::InvalidArgument, "Laurent evaluation at a zero coordinate");
            Rational pw;
            mpz_pow_ui(pw.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(std::abs(k)));
            mpz_pow_ui(pw.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(std::abs(k)));
            pw.canonicalize();
            if (k < 0)
                pw = 1 / pw;
            v *= pw;
        }
        total += v;
    }
    return total;
}

Rational LaurentPoly::augmentation() const
{
    Rational total = 0;
    for (const auto& [_, c] : terms_)
        total += c;
    return total;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        first = false;
        bool constant = true;
        std::ostringstream mono;
        for (int i = 0; i < nvars_; ++i) {
            const auto k = e[static_cast<std::size_t>(i)];
            if (k == 0)
                continue;
            mono << (constant ? "" : "*") << 't' << (i + 1);
            if (k != 1)
                mono << '^' << k;
            constant = false;
        }
        if (constant)
            out << mag.get_str();
        else if (mag == 1)
            out << mono.str();
        else
            out << mag.get_str() << '*' << mono.str();
    }
    return out.str();
}

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

namespace {

class LaurentParser {
public:
    LaurentParser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

    LaurentPoly parse()
    {
        LaurentPoly total(nvars_);
        skip_ws();
        if (pos_ >= text_.size())
            fail("empty polynomial");
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            LaurentPoly term = parse_term();
            if (sign < 0)
                term = -term;
            total += term;
            skip_ws();
        }
        return total;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(ErrorKind::Syntax, "Laurent polynomial '" + std::string(text_) + "': " + msg, 1,
                         static_cast<int>(pos_) + 1);
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    LaurentPoly parse_term()
    {
        Rational coeff = 1;
        Exponent e = zero_exponent();
        for (;;) {
            skip_ws();
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = digits();
                Rational value{Integer(num)};
                if (peek() == '/') {
                    ++pos_;
                    std::string den = digits();
                    if (den.empty() || Integer(den) == 0)
                        fail("bad denominator");
                    value = Rational(Integer(num), Integer(den));
                    value.canonicalize();
                }
                coeff *= value;
            } else if (c == 't') {
                ++pos_;
                std::string idx = digits();
                int var = idx.empty() ? 1 : std::stoi(idx);
                if (var < 1 || var > nvars_)
                    throw ParseError(ErrorKind::VariableMismatch,
                                     "variable t" + std::to_string(var) + " outside ring with " +
                                         std::to_string(nvars_) + " variables",
                                     1, static_cast<int>(pos_));
                std::int32_t k = 1;
                if (peek() == '^') {
                    ++pos_;
                    bool neg = false;
                    if (peek() == '-') {
                        neg = true;
                        ++pos_;
                    }
                    std::string ex = digits();
                    if (ex.empty())
                        fail("missing exponent");
                    k = std::stoi(ex) * (neg ? -1 : 1);
                }
                e[static_cast<std::size_t>(var - 1)] += k;
            } else {
                fail(c ? std::string("unexpected '") + c + "'" : "unexpected end");
            }
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        return LaurentPoly::monomial(nvars_, e, coeff);
    }

    std::string_view text_;
    int nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, int nvars)
{
    check_nvars(nvars);
    return LaurentParser(text, nvars).parse();
}

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, LaurentPoly(nvars))
{
}

LaurentMatrix LaurentMatrix::identity(std::size_t n, int nvars)
{
    LaurentMatrix m(n, n, nvars);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = LaurentPoly(nvars, 1);
    return m;
}

bool LaurentMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

LaurentMatrix LaurentMatrix::transpose() const
{
    LaurentMatrix t(cols_, rows_, nvars_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

LaurentMatrix LaurentMatrix::submatrix(const std::vector<std::size_t>& rows,
                                       const std::vector<std::size_t>& cols) const
{
    LaurentMatrix s(rows.size(), cols.size(), nvars_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            s(i, j) = (*this)(rows[i], cols[j]);
    return s;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error(ErrorKind::InvalidArgument, "Laurent matrix product: shape mismatch");
    if (a.nvars_ != b.nvars_)
        throw Error(ErrorKind::VariableMismatch, "Laurent matrix product: different rings");
    LaurentMatrix out(a.rows_, b.cols_, a.nvars_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const LaurentPoly& x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    out(i, j) += x * b(k, j);
        }
    return out;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorKind::InvalidArgument, "Laurent matrix sum: shape mismatch");
    LaurentMatrix out = a;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        out.data_[i] += b.data_[i];
    return out;
}

void LaurentMatrix::scale(const LaurentPoly& c)
{
    for (auto& p : data_)
        p = p * c;
}

QMatrix LaurentMatrix::evaluate(const std::vector<Rational>& point) const
{
    QMatrix q(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            q(r, c) = (*this)(r, c).evaluate(point);
    return q;
}

namespace {

struct PivotKey {
    bool non_unit;
    std::int64_t span;
    std::size_t terms;
    std::size_t row;
    std::size_t col;
    auto operator<=>(const PivotKey&) const = default;
};

}  // namespace

BareissTrace bareiss(const LaurentMatrix& m)
{
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    LaurentMatrix a = m;
    BareissTrace trace;
    trace.row_order.resize(nr);
    trace.col_order.resize(nc);
    for (std::size_t i = 0; i < nr; ++i)
        trace.row_order[i] = i;
    for (std::size_t j = 0; j < nc; ++j)
        trace.col_order[j] = j;

    LaurentPoly prev(m.nvars(), 1);
    std::size_t k = 0;
    for (; k < std::min(nr, nc); ++k) {
        std::optional<PivotKey> best;
        for (std::size_t i = k; i < nr; ++i)
            for (std::size_t j = k; j < nc; ++j) {
                const LaurentPoly& p = a(i, j);
                if (p.is_zero())
                    continue;
                PivotKey key{!p.is_unit(), p.degree_span(), p.term_count(), i, j};
                if (!best || key < *best)
                    best = key;
            }
        if (!best)
            break;
        if (best->row != k) {
            for (std::size_t j = 0; j < nc; ++j)
                std::swap(a(k, j), a(best->row, j));
            std::swap(trace.row_order[k], trace.row_order[best->row]);
        }
        if (best->col != k) {
            for (std::size_t i = 0; i < nr; ++i)
                std::swap(a(i, k), a(i, best->col));
            std::swap(trace.col_order[k], trace.col_order[best->col]);
        }
        const LaurentPoly pivot = a(k, k);
        const bool prev_unit = prev.is_unit();
        const LaurentPoly prev_inv = prev_unit ? prev.unit_inverse() : LaurentPoly(m.nvars());
        for (std::size_t i = k + 1; i < nr; ++i) {
            const LaurentPoly lead = a(i, k);
            for (std::size_t j = k + 1; j < nc; ++j) {
                LaurentPoly num = pivot * a(i, j);
                if (!lead.is_zero() && !a(k, j).is_zero())
                    num -= lead * a(k, j);
                if (prev_unit) {
                    a(i, j) = num * prev_inv;
                } else {
                    auto q = num.divide_exact(prev);
                    if (!q)
                        throw std::logic_error("bareiss: inexact division");
                    a(i, j) = std::move(*q);
                }
            }
            a(i, k) = LaurentPoly(m.nvars());
        }
        prev = pivot;
    }
    trace.rank = k;
    trace.last_pivot = prev;
    return trace;
}

std::size_t bareiss_rank(const LaurentMatrix& m) { return bareiss(m).rank; }

std::size_t kernel_rank(const LaurentMatrix& m) { return m.rows() - bareiss_rank(m); }

namespace {

int permutation_sign(std::vector<std::size_t> p)
{
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        while (p[i] != i) {
            std::swap(p[i], p[p[i]]);
            sign = -sign;
        }
    return sign;
}

}  // namespace

LaurentPoly determinant(const LaurentMatrix& m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorKind::InvalidArgument, "determinant of a non-square Laurent matrix");
    if (m.rows() == 0)
        return LaurentPoly(m.nvars(), 1);
    BareissTrace t = bareiss(m);
    if (t.rank < m.rows())
        return LaurentPoly(m.nvars());
    const int sign = permutation_sign(t.row_order) * permutation_sign(t.col_order);
    return sign < 0 ? -t.last_pivot : t.last_pivot;
}

QMatrix augment(const LaurentMatrix& m)
{
    QMatrix q(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            q(r, c) = m(r, c).augmentation();
    return q;
}

namespace {

// Adjugate of a square matrix: adj(a, b) = (-1)^(a+b) det(minor without row b, col a).
LaurentMatrix adjugate(const LaurentMatrix& s)
{
    const std::size_t n = s.rows();
    LaurentMatrix adj(n, n, s.nvars());
    if (n == 1) {
        adj(0, 0) = LaurentPoly(s.nvars(), 1);
        return adj;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t i = 0; i < n; ++i) {
                if (i != b)
                    rows.push_back(i);
                if (i != a)
                    cols.push_back(i);
            }
            LaurentPoly d = determinant(s.submatrix(rows, cols));
            adj(a, b) = ((a + b) % 2) ? -d : d;
        }
    return adj;
}

struct MinorData {
    std::vector<std::size_t> rows, cols;
    LaurentMatrix adj;
    LaurentPoly det;
};

MinorData maximal_minor(const LaurentMatrix& m)
{
    BareissTrace t = bareiss(m);
    MinorData md;
    md.rows.assign(t.row_order.begin(), t.row_order.begin() + static_cast<std::ptrdiff_t>(t.rank));
    md.cols.assign(t.col_order.begin(), t.col_order.begin() + static_cast<std::ptrdiff_t>(t.rank));
    std::sort(md.rows.begin(), md.rows.end());
    std::sort(md.cols.begin(), md.cols.end());
    LaurentMatrix s = m.submatrix(md.rows, md.cols);
    md.det = determinant(s);
    md.adj = t.rank ? adjugate(s) : LaurentMatrix(0, 0, m.nvars());
    return md;
}

}  // namespace

LaurentMatrix left_kernel_basis(const LaurentMatrix& m)
{
    const MinorData md = maximal_minor(m);
    const std::size_t rho = md.rows.size();
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!std::binary_search(md.rows.begin(), md.rows.end(), i))
            others.push_back(i);
    LaurentMatrix k(others.size(), m.rows(), m.nvars());
    for (std::size_t n = 0; n < others.size(); ++n) {
        const std::size_t i = others[n];
        k(n, i) = md.det;
        for (std::size_t b = 0; b < rho; ++b) {
            LaurentPoly acc(m.nvars());
            for (std::size_t a = 0; a < rho; ++a)
                if (!m(i, md.cols[a]).is_zero())
                    acc += m(i, md.cols[a]) * md.adj(a, b);
            k(n, md.rows[b]) = -acc;
        }
    }
    return k;
}

std::optional<ScaledSolution> solve_left_scaled(const LaurentMatrix& m, const LaurentMatrix& rhs)
{
    if (rhs.cols() != m.cols())
        throw Error(ErrorKind::InvalidArgument, "solve_left_scaled: column counts differ");
    const MinorData md = maximal_minor(m);
    const std::size_t rho = md.rows.size();
    ScaledSolution sol{LaurentMatrix(rhs.rows(), m.rows(), m.nvars()),
                       rho ? md.det : LaurentPoly(m.nvars(), 1)};
    for (std::size_t r = 0; r < rhs.rows(); ++r)
        for (std::size_t b = 0; b < rho; ++b) {
            LaurentPoly acc(m.nvars());
            for (std::size_t a = 0; a < rho; ++a)
                if (!rhs(r, md.cols[a]).is_zero())
                    acc += rhs(r, md.cols[a]) * md.adj(a, b);
            sol.solution(r, md.rows[b]) = acc;
        }
    LaurentMatrix check = sol.solution * m;
    LaurentMatrix target = rhs;
    target.scale(sol.scale);
    if (!(check == target))
        return std::nullopt;
    return sol;
}

std::size_t sampled_rank(const LaurentMatrix& m, std::mt19937_64& rng, int attempts)
{
    std::uniform_int_distribution<int> dist(-97, 96);
    std::size_t best = 0;
    for (int a = 0; a < attempts; ++a) {
        std::vector<Rational> point;
        for (int i = 0; i < m.nvars(); ++i) {
            int v = dist(rng);
            point.emplace_back(v >= 0 ? v + 1 : v);
        }
        best = std::max(best, rank(m.evaluate(point)));
    }
    return best;
}

std::string format_matrix(const LaurentMatrix& m)
{
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c)
            out << (c ? ", " : "") << m(r, c).to_string();
        out << ']';
    }
    out << ']';
    return out.str();
}

}  // namespace gslab
