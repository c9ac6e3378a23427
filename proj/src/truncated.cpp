#include "gslab/truncated.hpp"

#include <stdexcept>

#include "gslab/error.hpp"

namespace gslab {

WordIndex::WordIndex(int m, int q) : m_(m), q_(q)
{
    if (m < 0 || q < 0)
        throw Error(ErrorKind::InvalidArgument, "WordIndex: negative size");
    std::uint64_t p = 1;
    std::uint64_t total = 0;
    for (int k = 0; k <= q; ++k) {
        powers_.push_back(static_cast<std::uint32_t>(p));
        offsets_.push_back(static_cast<std::uint32_t>(total));
        total += p;
        p *= static_cast<std::uint64_t>(m);
        if (total > UINT32_MAX / 2)
            throw Error(ErrorKind::DegreeOverflow, "truncated algebra too large");
    }
    offsets_.push_back(static_cast<std::uint32_t>(total));
}

int WordIndex::degree_of(std::uint32_t index) const
{
    for (int k = 0; k <= q_; ++k)
        if (index < offsets_[static_cast<std::size_t>(k) + 1])
            return k;
    throw std::out_of_range("WordIndex::degree_of");
}

std::uint32_t WordIndex::concat(int da, std::uint32_t ca, int db, std::uint32_t cb) const
{
    return offset(da + db) + ca * block_size(db) + cb;
}

std::uint32_t WordIndex::code_of(const std::vector<int>& letters) const
{
    std::uint32_t code = 0;
    for (int l : letters)
        code = code * static_cast<std::uint32_t>(m_) + static_cast<std::uint32_t>(l);
    return code;
}

std::vector<int> WordIndex::letters_of(int degree, std::uint32_t code) const
{
    std::vector<int> out(static_cast<std::size_t>(degree));
    for (int i = degree - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint32_t>(m_));
        code /= static_cast<std::uint32_t>(m_);
    }
    return out;
}

TruncatedElement::TruncatedElement(int m, int q) : index_(m, q), coeffs_(index_.size()) {}

TruncatedElement TruncatedElement::one(int m, int q)
{
    TruncatedElement e(m, q);
    e.coeffs_[0] = 1;
    return e;
}

TruncatedElement TruncatedElement::magnus_generator(int m, int q, int i)
{
    return magnus_power(m, q, i, 1);
}

TruncatedElement TruncatedElement::magnus_power(int m, int q, int i, std::int64_t e)
{
    if (i < 0 || i >= m)
        throw Error(ErrorKind::InvalidArgument, "Magnus generator index out of range");
    TruncatedElement out(m, q);
    // binom(e, k) for integer e, any sign.
    Rational c = 1;
    std::uint32_t code = 0;
    for (int k = 0; k <= q; ++k) {
        if (k > 0) {
            c *= Rational(e - (k - 1));
            c /= k;
            code = code * static_cast<std::uint32_t>(m) + static_cast<std::uint32_t>(i);
        }
        if (c == 0)
            break;
        out.coeffs_[out.index_.index(k, code)] = c;
    }
    return out;
}

const Rational& TruncatedElement::coefficient(const std::vector<int>& word) const
{
    const int d = static_cast<int>(word.size());
    if (d > index_.max_degree())
        throw Error(ErrorKind::DegreeOverflow, "coefficient beyond truncation degree");
    return coeffs_[index_.index(d, index_.code_of(word))];
}

TruncatedElement& TruncatedElement::operator+=(const TruncatedElement& o)
{
    if (coeffs_.size() != o.coeffs_.size())
        throw Error(ErrorKind::InvalidArgument, "truncated elements of different shapes");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedElement& TruncatedElement::operator-=(const TruncatedElement& o)
{
    if (coeffs_.size() != o.coeffs_.size())
        throw Error(ErrorKind::InvalidArgument, "truncated elements of different shapes");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncatedElement operator*(const TruncatedElement& a, const TruncatedElement& b)
{
    if (a.letters() != b.letters() || a.max_degree() != b.max_degree())
        throw Error(ErrorKind::InvalidArgument, "truncated elements of different shapes");
    const WordIndex& ix = a.index_;
    const int q = ix.max_degree();
    TruncatedElement out(a.letters(), q);

    struct Nz {
        int degree;
        std::uint32_t code;
        const Rational* value;
    };
    auto nonzeros = [&](const TruncatedElement& e) {
        std::vector<Nz> v;
        for (int d = 0; d <= q; ++d)
            for (std::uint32_t c = 0; c < ix.block_size(d); ++c) {
                const Rational& x = e.coeffs_[ix.index(d, c)];
                if (x != 0)
                    v.push_back({d, c, &x});
            }
        return v;
    };
    const auto na = nonzeros(a);
    const auto nb = nonzeros(b);
    for (const auto& x : na)
        for (const auto& y : nb) {
            if (x.degree + y.degree > q)
                continue;
            out.coeffs_[ix.concat(x.degree, x.code, y.degree, y.code)] += *x.value * *y.value;
        }
    return out;
}

TruncatedElement magnus_image(const Word& w, int m, int q)
{
    if (q < 1)
        throw Error(ErrorKind::InvalidArgument, "Magnus truncation degree must be >= 1");
    TruncatedElement acc = TruncatedElement::one(m, q);
    for (const auto& l : w.letters()) {
        if (l.gen >= m)
            throw Error(ErrorKind::InvalidArgument, "word uses a generator beyond the Magnus alphabet");
        acc = acc * TruncatedElement::magnus_power(m, q, l.gen, l.exponent);
    }
    return acc;
}

}  // namespace gslab
