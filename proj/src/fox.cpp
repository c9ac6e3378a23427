#include "gslab/fox.hpp"

#include <sstream>

#include "gslab/error.hpp"

namespace gslab {

GroupRingElt GroupRingElt::one() { return of(Word()); }

GroupRingElt GroupRingElt::of(const Word& w, const Rational& coeff)
{
    GroupRingElt e;
    e.add_term(free_reduce(w), coeff);
    return e;
}

void GroupRingElt::add_term(const Word& w, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

GroupRingElt& GroupRingElt::operator+=(const GroupRingElt& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

GroupRingElt& GroupRingElt::operator-=(const GroupRingElt& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b)
{
    GroupRingElt out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_)
            out.add_term(free_reduce(wa * wb), ca * cb);
    return out;
}

std::string GroupRingElt::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        first = false;
        Rational mag = abs(c);
        if (w.empty()) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1)
            out << mag.get_str() << '*';
        out << '(' << format_word(w, names) << ')';
    }
    return out.str();
}

GroupRingElt fox_derivative(const Word& w, int gen)
{
    GroupRingElt out;
    Word prefix;
    for (const auto& l : w.letters()) {
        if (l.gen == gen) {
            if (l.exponent > 0) {
                for (std::int64_t k = 0; k < l.exponent; ++k)
                    out += GroupRingElt::of(prefix * Word::generator(gen, k));
            } else {
                for (std::int64_t k = 1; k <= -l.exponent; ++k)
                    out -= GroupRingElt::of(prefix * Word::generator(gen, -k));
            }
        }
        prefix = free_reduce(prefix * Word::generator(l.gen, l.exponent));
    }
    return out;
}

std::vector<std::int64_t> CoefficientSystem::image(const Word& w) const
{
    std::vector<std::int64_t> out(static_cast<std::size_t>(nvars), 0);
    for (const auto& l : w.letters())
        for (int k = 0; k < nvars; ++k)
            out[static_cast<std::size_t>(k)] +=
                l.exponent *
                generator_images(static_cast<std::size_t>(l.gen), static_cast<std::size_t>(k)).get_si();
    return out;
}

bool CoefficientSystem::kills(const std::vector<Word>& relators) const
{
    for (const auto& r : relators)
        for (auto v : image(r))
            if (v != 0)
                return false;
    return true;
}

CoefficientSystem abelian_coefficients(const Presentation& p)
{
    AbelianizationData ab = abelianization(p);
    return {ab.free_rank, ab.basis_map};
}

CoefficientSystem pull_back(const GroupHom& h, const CoefficientSystem& on_target)
{
    CoefficientSystem c{on_target.nvars, IntMatrix(h.images.size(), static_cast<std::size_t>(on_target.nvars))};
    for (std::size_t i = 0; i < h.images.size(); ++i) {
        auto v = on_target.image(h.images[i]);
        for (std::size_t k = 0; k < v.size(); ++k)
            c.generator_images(i, k) = Integer(static_cast<long>(v[k]));
    }
    return c;
}

namespace {

LaurentPoly monomial_of(const std::vector<std::int64_t>& e, int nvars)
{
    Exponent ex{};
    ex.fill(0);
    for (std::size_t i = 0; i < e.size(); ++i)
        ex[i] = static_cast<std::int32_t>(e[i]);
    return LaurentPoly::monomial(nvars, ex);
}

}  // namespace

LaurentMatrix fox_jacobian(const std::vector<Word>& words, int rank, const CoefficientSystem& coeffs)
{
    const int b = coeffs.nvars;
    if (static_cast<int>(coeffs.generator_images.rows()) != rank)
        throw Error(ErrorKind::InvalidCoefficientSystem, "coefficient system has wrong generator count");
    LaurentMatrix j(words.size(), static_cast<std::size_t>(rank), b);
    for (std::size_t r = 0; r < words.size(); ++r) {
        // Running abelian image of the prefix.
        std::vector<std::int64_t> prefix(static_cast<std::size_t>(b), 0);
        for (const auto& l : words[r].letters()) {
            std::vector<std::int64_t> step(static_cast<std::size_t>(b));
            for (int k = 0; k < b; ++k)
                step[static_cast<std::size_t>(k)] =
                    coeffs.generator_images(static_cast<std::size_t>(l.gen), static_cast<std::size_t>(k)).get_si();
            auto at = [&](std::int64_t power) {
                std::vector<std::int64_t> e(prefix);
                for (std::size_t k = 0; k < e.size(); ++k)
                    e[k] += power * step[k];
                return monomial_of(e, b);
            };
            LaurentPoly& entry = j(r, static_cast<std::size_t>(l.gen));
            if (l.exponent > 0) {
                for (std::int64_t k = 0; k < l.exponent; ++k)
                    entry += at(k);
            } else {
                for (std::int64_t k = 1; k <= -l.exponent; ++k)
                    entry -= at(-k);
            }
            for (std::size_t k = 0; k < prefix.size(); ++k)
                prefix[k] += l.exponent * step[k];
        }
    }
    return j;
}

AlexanderComplex alexander_complex(const Presentation& p)
{
    return alexander_complex(p, abelian_coefficients(p));
}

AlexanderComplex alexander_complex(const Presentation& p, const CoefficientSystem& coeffs)
{
    if (p.rank() == 0)
        throw Error(ErrorKind::InvalidArgument, "Alexander complex needs at least one generator");
    AlexanderComplex c;
    c.b = coeffs.nvars;
    c.d2 = fox_jacobian(p.relators, p.rank(), coeffs);
    c.d1 = LaurentMatrix(static_cast<std::size_t>(p.rank()), 1, c.b);
    for (int i = 0; i < p.rank(); ++i)
        c.d1(static_cast<std::size_t>(i), 0) =
            LaurentPoly::unit_minus_one(c.b, coeffs.image(Word::generator(i)));
    return c;
}

int h1_rank(const AlexanderComplex& c)
{
    return static_cast<int>(kernel_rank(c.d1)) - static_cast<int>(bareiss_rank(c.d2));
}

int h1_rank_abelian_cover(const Presentation& p) { return h1_rank(alexander_complex(p)); }

InducedAlexanderMap induced_alexander_map(const GroupHom& h)
{
    return induced_alexander_map(h, abelian_coefficients(h.target));
}

InducedAlexanderMap induced_alexander_map(const GroupHom& h, const CoefficientSystem& on_target)
{
    if (!on_target.kills(h.target.relators))
        throw Error(ErrorKind::InvalidCoefficientSystem, "a target relator has nonzero image in Z^b");
    if (!hom_welldefined_upto(h, 2).certified)
        throw Error(ErrorKind::NotWellDefined, "homomorphism fails the degree-2 Magnus check");

    InducedAlexanderMap out;
    out.coefficients = on_target;
    const CoefficientSystem on_source = pull_back(h, on_target);
    out.source = alexander_complex(h.source, on_source);
    out.target = alexander_complex(h.target, on_target);
    out.chain_map_1 = fox_jacobian(h.images, h.target.rank(), on_target);

    // Relator images must land in the span of the target's relator rows.
    auto lifted = solve_left_scaled(out.target.d2, out.source.d2 * out.chain_map_1);
    if (!lifted)
        throw Error(ErrorKind::NotWellDefined,
                    "relator images are not in the span of the target Fox Jacobian");
    out.chain_map_2 = std::move(*lifted);

    IntMatrix e(h.images.size(), static_cast<std::size_t>(on_target.nvars));
    for (std::size_t i = 0; i < h.images.size(); ++i) {
        auto v = on_target.image(h.images[i]);
        for (std::size_t k = 0; k < v.size(); ++k)
            e(i, k) = Integer(static_cast<long>(v[k]));
    }
    out.coefficients_injective =
        static_cast<int>(rational_rank(e)) == abelianization(h.source).free_rank;

    out.source_rank = h1_rank(out.source);
    out.target_rank = h1_rank(out.target);
    out.source_cycles = left_kernel_basis(out.source.d1);

    // image = (Z_A f1 + im d2_B) / im d2_B
    const LaurentMatrix pushed = out.source_cycles * out.chain_map_1;
    LaurentMatrix stacked(pushed.rows() + out.target.d2.rows(), pushed.cols(), on_target.nvars);
    for (std::size_t r = 0; r < pushed.rows(); ++r)
        for (std::size_t c = 0; c < pushed.cols(); ++c)
            stacked(r, c) = pushed(r, c);
    for (std::size_t r = 0; r < out.target.d2.rows(); ++r)
        for (std::size_t c = 0; c < pushed.cols(); ++c)
            stacked(pushed.rows() + r, c) = out.target.d2(r, c);
    out.image_rank =
        static_cast<int>(bareiss_rank(stacked)) - static_cast<int>(bareiss_rank(out.target.d2));
    return out;
}

MonoCertificate metabelian_mono_certificate(const GroupHom& h)
{
    InducedAlexanderMap m = induced_alexander_map(h);
    MonoCertificate c;
    c.source_rank = m.source_rank;
    c.image_rank = m.image_rank;
    c.coefficients_injective = m.coefficients_injective;
    c.rank_preserved = m.image_rank == m.source_rank;
    return c;
}

}  // namespace gslab
