#include "gslab/chain_complex.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "gslab/error.hpp"
#include "json.hpp"

namespace gslab {

namespace {

// Places src into dst with its top-left corner at (r0, c0).
void paste(LaurentMatrix& dst, const LaurentMatrix& src, std::size_t r0, std::size_t c0, bool negate = false)
{
    for (std::size_t r = 0; r < src.rows(); ++r)
        for (std::size_t c = 0; c < src.cols(); ++c)
            dst(r0 + r, c0 + c) = negate ? -src(r, c) : src(r, c);
}

LaurentMatrix vstack(const LaurentMatrix& a, const LaurentMatrix& b, int nvars)
{
    LaurentMatrix out(a.rows() + b.rows(), std::max(a.cols(), b.cols()), nvars);
    paste(out, a, 0, 0);
    paste(out, b, a.rows(), 0);
    return out;
}

int qrank(const QMatrix& m) { return static_cast<int>(rank(m)); }

}  // namespace

int FreeComplex::rank_at(int p) const
{
    if (p < 0 || p > top())
        return 0;
    return ranks[static_cast<std::size_t>(p)];
}

LaurentMatrix FreeComplex::boundary(int p) const
{
    if (p >= 1 && p <= top() && static_cast<std::size_t>(p) <= boundaries.size())
        return boundaries[static_cast<std::size_t>(p) - 1];
    return LaurentMatrix(static_cast<std::size_t>(rank_at(p)), static_cast<std::size_t>(rank_at(p - 1)), b);
}

FreeComplex FreeComplex::from_alexander(const AlexanderComplex& c)
{
    FreeComplex f;
    f.b = c.b;
    f.ranks = {1, static_cast<int>(c.d1.rows()), static_cast<int>(c.d2.rows())};
    f.boundaries = {c.d1, c.d2};
    return f;
}

ComplexCheck complex_validate(const FreeComplex& c)
{
    ComplexCheck out;
    auto fail = [&](std::string msg) {
        out.valid = false;
        out.failure = std::move(msg);
        return out;
    };
    if (c.b < 0 || c.b > kMaxLaurentVariables)
        return fail("variable count " + std::to_string(c.b) + " outside 0.." + std::to_string(kMaxLaurentVariables));
    for (std::size_t p = 0; p < c.ranks.size(); ++p)
        if (c.ranks[p] < 0)
            return fail("ranks[" + std::to_string(p) + "] is negative");
    const std::size_t want = c.ranks.empty() ? 0 : c.ranks.size() - 1;
    if (c.boundaries.size() != want)
        return fail("expected " + std::to_string(want) + " boundary matrices, found " +
                    std::to_string(c.boundaries.size()));
    for (std::size_t i = 0; i < c.boundaries.size(); ++i) {
        const LaurentMatrix& d = c.boundaries[i];
        if (d.rows() != static_cast<std::size_t>(c.ranks[i + 1]) || d.cols() != static_cast<std::size_t>(c.ranks[i]))
            return fail("boundaries[" + std::to_string(i) + "] has shape " + std::to_string(d.rows()) + "x" +
                        std::to_string(d.cols()) + ", expected " + std::to_string(c.ranks[i + 1]) + "x" +
                        std::to_string(c.ranks[i]));
        if (d.rows() * d.cols() > 0 && d.nvars() != c.b)
            return fail("boundaries[" + std::to_string(i) + "] is over " + std::to_string(d.nvars()) +
                        " variables, expected " + std::to_string(c.b));
    }
    for (std::size_t i = 1; i < c.boundaries.size(); ++i) {
        const LaurentMatrix prod = c.boundaries[i] * c.boundaries[i - 1];
        for (std::size_t r = 0; r < prod.rows(); ++r)
            for (std::size_t col = 0; col < prod.cols(); ++col)
                if (!prod(r, col).is_zero())
                    return fail("boundaries[" + std::to_string(i) + "] * boundaries[" + std::to_string(i - 1) +
                                "] is nonzero at entry (" + std::to_string(r) + "," + std::to_string(col) +
                                "): " + prod(r, col).to_string());
    }
    return out;
}

int homology_rank(const FreeComplex& c, int p)
{
    if (p < 0 || p > c.top())
        return 0;
    return c.rank_at(p) - static_cast<int>(bareiss_rank(c.boundary(p))) -
           static_cast<int>(bareiss_rank(c.boundary(p + 1)));
}

int augmented_homology_dim(const FreeComplex& c, int p)
{
    if (p < 0 || p > c.top())
        return 0;
    return c.rank_at(p) - qrank(augment(c.boundary(p))) - qrank(augment(c.boundary(p + 1)));
}

namespace {

void require_valid(const FreeComplex& c)
{
    const ComplexCheck chk = complex_validate(c);
    if (!chk.valid)
        throw Error(ErrorKind::InvalidComplex, chk.failure);
}

}  // namespace

StrebelReport strebel_audit(const FreeComplex& c)
{
    require_valid(c);
    StrebelReport rep;
    for (int p = 0; p <= c.top(); ++p) {
        StrebelLine l;
        l.p = p;
        l.lambda_rank = homology_rank(c, p);
        l.q_dim = augmented_homology_dim(c, p);
        l.ok = l.lambda_rank <= l.q_dim;
        rep.falsification = rep.falsification || !l.ok;
        rep.lines.push_back(l);
    }
    return rep;
}

EulerReport euler_characteristic_report(const FreeComplex& c)
{
    require_valid(c);
    EulerReport rep;
    for (int p = 0; p <= c.top(); ++p) {
        const int sign = (p % 2 == 0) ? 1 : -1;
        rep.from_ranks += sign * c.rank_at(p);
        rep.from_lambda += sign * homology_rank(c, p);
        rep.from_q += sign * augmented_homology_dim(c, p);
    }
    rep.falsification = rep.from_ranks != rep.from_lambda || rep.from_ranks != rep.from_q;
    return rep;
}

QuotientBound quotient_rank_bound(const FreeComplex& c, const LaurentMatrix& cycles, int p)
{
    require_valid(c);
    if (p < 0 || p > c.top())
        throw Error(ErrorKind::InvalidArgument, "dimension " + std::to_string(p) + " outside the complex");
    const std::size_t s = cycles.rows();
    if (s > 0 && cycles.cols() != static_cast<std::size_t>(c.rank_at(p)))
        throw Error(ErrorKind::InvalidArgument, "cycle length differs from the rank of C_" + std::to_string(p));
    const LaurentMatrix dp = c.boundary(p);
    if (s > 0 && p > 0) {
        const LaurentMatrix img = cycles * dp;
        for (std::size_t r = 0; r < img.rows(); ++r)
            for (std::size_t col = 0; col < img.cols(); ++col)
                if (!img(r, col).is_zero())
                    throw Error(ErrorKind::NotACycle, "cycle " + std::to_string(r) + " has nonzero boundary");
    }

    QuotientBound out;
    out.p = p;
    out.cycles = static_cast<int>(s);
    FreeComplex d = c;
    if (p == d.top()) {
        d.ranks.push_back(0);
        d.boundaries.emplace_back(0, static_cast<std::size_t>(d.ranks[static_cast<std::size_t>(p)]), d.b);
    }
    const auto ps = static_cast<std::size_t>(p);
    const int old_rank = d.ranks[ps + 1];
    d.ranks[ps + 1] = static_cast<int>(s) + old_rank;
    // D_{p+1} = (free on the cycles) + C_{p+1}; the new summand comes first.
    LaurentMatrix cyc = s > 0 ? cycles : LaurentMatrix(0, static_cast<std::size_t>(c.rank_at(p)), c.b);
    d.boundaries[ps] = vstack(cyc, d.boundaries[ps], d.b);
    if (ps + 1 < d.boundaries.size()) {
        const LaurentMatrix& up = c.boundaries[ps + 1];
        LaurentMatrix widened(up.rows(), s + up.cols(), d.b);
        paste(widened, up, 0, s);
        d.boundaries[ps + 1] = widened;
    }
    require_valid(d);
    out.cycles_unchanged = d.boundary(p) == c.boundary(p);
    out.k_lambda = homology_rank(d, p);
    out.k_q = augmented_homology_dim(d, p);
    out.original_lambda = homology_rank(c, p);
    out.original_q = augmented_homology_dim(c, p);
    out.falsification = out.k_lambda > out.k_q || !out.cycles_unchanged;
    out.extended = std::move(d);
    return out;
}

LaurentMatrix ChainMap::at(int i) const
{
    if (i >= 0 && static_cast<std::size_t>(i) < maps.size())
        return maps[static_cast<std::size_t>(i)];
    return LaurentMatrix(static_cast<std::size_t>(source.rank_at(i)), static_cast<std::size_t>(target.rank_at(i)),
                         target.b);
}

ComplexCheck chain_map_validate(const ChainMap& f)
{
    ComplexCheck out;
    if (f.source.b != f.target.b) {
        out.valid = false;
        out.failure = "source and target have different variable counts";
        return out;
    }
    for (const FreeComplex* c : {&f.source, &f.target}) {
        out = complex_validate(*c);
        if (!out.valid)
            return out;
    }
    const int top = std::max(f.source.top(), f.target.top());
    for (int i = 0; i <= top; ++i) {
        const LaurentMatrix fi = f.at(i);
        if (fi.rows() != static_cast<std::size_t>(f.source.rank_at(i)) ||
            fi.cols() != static_cast<std::size_t>(f.target.rank_at(i))) {
            out.valid = false;
            out.failure = "map in degree " + std::to_string(i) + " has the wrong shape";
            return out;
        }
        if (i == 0)
            continue;
        if (!(f.source.boundary(i) * f.at(i - 1) == fi * f.target.boundary(i))) {
            out.valid = false;
            out.failure = "map does not commute with the boundary in degree " + std::to_string(i);
            return out;
        }
    }
    return out;
}

FreeComplex mapping_cone(const ChainMap& f)
{
    const ComplexCheck chk = chain_map_validate(f);
    if (!chk.valid)
        throw Error(ErrorKind::InvalidComplex, "chain map: " + chk.failure);
    const FreeComplex& x = f.source;
    const FreeComplex& y = f.target;
    FreeComplex z;
    z.b = y.b;
    const int top = std::max(x.top() + 1, y.top());
    for (int i = 0; i <= top; ++i)
        z.ranks.push_back(x.rank_at(i - 1) + y.rank_at(i));
    for (int i = 1; i <= top; ++i) {
        const auto xr = static_cast<std::size_t>(x.rank_at(i - 1));
        LaurentMatrix d(static_cast<std::size_t>(z.ranks[static_cast<std::size_t>(i)]),
                        static_cast<std::size_t>(z.ranks[static_cast<std::size_t>(i) - 1]), z.b);
        // Rows: X_{i-1} then Y_i. Columns: X_{i-2} then Y_{i-1}.
        const auto xcols = static_cast<std::size_t>(x.rank_at(i - 2));
        paste(d, x.boundary(i - 1), 0, 0, true);
        paste(d, f.at(i - 1), 0, xcols);
        paste(d, y.boundary(i), xr, xcols);
        z.boundaries.push_back(std::move(d));
    }
    require_valid(z);
    return z;
}

int homology_map_rank(const ChainMap& f, int p)
{
    const LaurentMatrix dx = f.source.boundary(p);
    const LaurentMatrix cycles =
        dx.cols() == 0 ? LaurentMatrix::identity(dx.rows(), f.source.b) : left_kernel_basis(dx);
    const LaurentMatrix pushed = cycles * f.at(p);
    const LaurentMatrix by = f.target.boundary(p + 1);
    return static_cast<int>(bareiss_rank(vstack(pushed, by, f.target.b))) - static_cast<int>(bareiss_rank(by));
}

ChainMap alexander_chain_map(const InducedAlexanderMap& m)
{
    ChainMap f;
    f.source = FreeComplex::from_alexander(m.source);
    f.target = FreeComplex::from_alexander(m.target);
    const LaurentPoly& c = m.chain_map_2.scale;
    LaurentMatrix f0(1, 1, m.target.b);
    f0(0, 0) = c;
    LaurentMatrix f1 = m.chain_map_1;
    f1.scale(c);
    f.maps = {f0, f1, m.chain_map_2.solution};
    return f;
}

std::optional<CoefficientSystem> parse_gamma(std::string_view spec, const Presentation& target)
{
    std::string s(spec);
    if (s == "auto" || s.empty())
        return std::nullopt;
    std::replace(s.begin(), s.end(), '/', ';');  // shell-friendly row separator
    std::vector<std::vector<std::int64_t>> rows;
    std::stringstream rs(s);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<std::int64_t> r;
        std::stringstream es(row);
        std::string tok;
        while (std::getline(es, tok, ',')) {
            std::size_t used = 0;
            std::int64_t v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                throw ParseError(ErrorKind::Syntax, "gamma entry '" + tok + "' is not an integer", 0, 0);
            }
            if (tok.find_first_not_of(" \t", used) != std::string::npos)
                throw ParseError(ErrorKind::Syntax, "gamma entry '" + tok + "' is not an integer", 0, 0);
            r.push_back(v);
        }
        rows.push_back(std::move(r));
    }
    if (static_cast<int>(rows.size()) != target.rank())
        throw Error(ErrorKind::InvalidCoefficientSystem,
                    "gamma has " + std::to_string(rows.size()) + " rows, target has " +
                        std::to_string(target.rank()) + " generators");
    const std::size_t b = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != b)
            throw Error(ErrorKind::InvalidCoefficientSystem, "gamma rows have different lengths");
    if (b == 0 || b > static_cast<std::size_t>(kMaxLaurentVariables))
        throw Error(ErrorKind::InvalidCoefficientSystem, "gamma needs 1.." + std::to_string(kMaxLaurentVariables) +
                                                             " columns");
    CoefficientSystem cs;
    cs.nvars = static_cast<int>(b);
    cs.generator_images = IntMatrix(rows.size(), b);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < b; ++k)
            cs.generator_images(i, k) = Integer(static_cast<long>(rows[i][k]));
    if (!cs.kills(target.relators))
        throw Error(ErrorKind::InvalidCoefficientSystem, "a target relator has nonzero image under gamma");
    return cs;
}

TwoConnectedReport two_connected_torsion_check(const GroupHom& h, const std::optional<CoefficientSystem>& gamma,
                                               bool assume_h2)
{
    const CoefficientSystem cs = gamma ? *gamma : abelian_coefficients(h.target);
    if (!cs.kills(h.target.relators))
        throw Error(ErrorKind::InvalidCoefficientSystem, "a target relator has nonzero image under gamma");
    TwoConnectedReport rep;
    rep.gamma = cs;
    rep.h1 = induced_h1_rational(h);
    rep.h1_mono = rep.h1.injective() ? Hypothesis{HypothesisStatus::Verified, "H1(-;Q) map injective"}
                                     : Hypothesis{HypothesisStatus::Failed, "H1(-;Q) map not injective"};
    rep.h1_iso = rep.h1.isomorphism() ? Hypothesis{HypothesisStatus::Verified, "H1(-;Q) map bijective"}
                                      : Hypothesis{HypothesisStatus::Failed, "H1(-;Q) map not bijective"};
    const Hypothesis epi = h2_epi_hypothesis(h, false);
    if (epi.status == HypothesisStatus::Verified)
        rep.h2_span = epi;
    else if (assume_h2)
        rep.h2_span = {HypothesisStatus::Assumed, "H2 of the target spanned by the image and surfaces (asserted)"};
    else
        rep.h2_span = {HypothesisStatus::Unknown, "no certificate for the H2 spanning hypothesis"};

    const InducedAlexanderMap m = induced_alexander_map(h, cs);
    rep.source_rank = m.source_rank;
    rep.target_rank = m.target_rank;
    rep.image_rank = m.image_rank;
    rep.kernel_rank = m.kernel_rank();
    rep.cokernel_rank = m.cokernel_rank();

    const ChainMap f = alexander_chain_map(m);
    const FreeComplex cone = mapping_cone(f);
    for (int p = 0; p <= cone.top(); ++p) {
        rep.cone_lambda.push_back(homology_rank(cone, p));
        rep.cone_q.push_back(augmented_homology_dim(cone, p));
        rep.cone_strebel_ok = rep.cone_strebel_ok && rep.cone_lambda.back() <= rep.cone_q.back();
    }
    // rank H_p(Z) = coker(H_p X -> H_p Y) + ker(H_{p-1} X -> H_{p-1} Y)
    std::vector<int> img;
    for (int p = 0; p <= cone.top(); ++p)
        img.push_back(homology_map_rank(f, p));
    for (int p = 0; p <= cone.top(); ++p) {
        const int coker = homology_rank(f.target, p) - img[static_cast<std::size_t>(p)];
        const int ker = p == 0 ? 0 : homology_rank(f.source, p - 1) - img[static_cast<std::size_t>(p) - 1];
        if (rep.cone_lambda[static_cast<std::size_t>(p)] != coker + ker)
            rep.les_consistent = false;
    }
    if (img.size() > 1 && img[1] != rep.image_rank)
        rep.les_consistent = false;

    rep.kernel_conclusion_applies = rep.h1_mono.holds() && rep.h2_span.holds();
    rep.cokernel_conclusion_applies = rep.h1_iso.holds();
    const bool kernel_fails = rep.kernel_conclusion_applies && rep.kernel_rank != 0;
    const bool cokernel_fails = rep.cokernel_conclusion_applies && rep.cokernel_rank != 0;
    rep.assumption_refuted = kernel_fails && rep.h2_span.status == HypothesisStatus::Assumed;
    rep.falsification = (kernel_fails && !rep.assumption_refuted) || cokernel_fails || !rep.les_consistent ||
                        !rep.cone_strebel_ok;
    return rep;
}

FreeComplex parse_ccx(std::string_view text, std::string_view source_name)
{
    const std::string src(source_name);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Convert the byte offset to a line and column.
        int line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(ErrorKind::Syntax, "malformed JSON", line, col, src);
    }
    auto fail = [&](const std::string& path, const std::string& msg) -> ParseError {
        return ParseError(ErrorKind::InvalidComplex, path + ": " + msg, 0, 0, src);
    };
    if (!j.is_object())
        throw fail("$", "expected an object");
    if (!j.contains("vars") || !j["vars"].is_number_integer())
        throw fail("$.vars", "expected an integer");
    if (!j.contains("ranks") || !j["ranks"].is_array())
        throw fail("$.ranks", "expected an array");
    if (!j.contains("boundaries") || !j["boundaries"].is_array())
        throw fail("$.boundaries", "expected an array");
    FreeComplex c;
    c.b = j["vars"].get<int>();
    if (c.b < 0 || c.b > kMaxLaurentVariables)
        throw fail("$.vars", "must be between 0 and " + std::to_string(kMaxLaurentVariables));
    for (std::size_t i = 0; i < j["ranks"].size(); ++i) {
        const auto& r = j["ranks"][i];
        if (!r.is_number_integer() || r.get<int>() < 0)
            throw fail("$.ranks[" + std::to_string(i) + "]", "expected a nonnegative integer");
        c.ranks.push_back(r.get<int>());
    }
    const auto& bs = j["boundaries"];
    for (std::size_t i = 0; i < bs.size(); ++i) {
        const std::string path = "$.boundaries[" + std::to_string(i) + "]";
        if (!bs[i].is_array())
            throw fail(path, "expected a matrix");
        const std::size_t rows = bs[i].size();
        std::size_t cols = 0;
        if (i < c.ranks.size())
            cols = static_cast<std::size_t>(c.ranks[i]);
        if (rows > 0)
            cols = bs[i][0].is_array() ? bs[i][0].size() : 0;
        LaurentMatrix m(rows, cols, c.b);
        for (std::size_t r = 0; r < rows; ++r) {
            const auto& row = bs[i][r];
            if (!row.is_array() || row.size() != cols)
                throw fail(path + "[" + std::to_string(r) + "]", "ragged or non-array row");
            for (std::size_t k = 0; k < cols; ++k) {
                const std::string epath = path + "[" + std::to_string(r) + "][" + std::to_string(k) + "]";
                std::string poly;
                if (row[k].is_string())
                    poly = row[k].get<std::string>();
                else if (row[k].is_number_integer())
                    poly = std::to_string(row[k].get<long long>());
                else
                    throw fail(epath, "expected a polynomial string");
                try {
                    m(r, k) = parse_laurent(poly, c.b);
                } catch (const Error& e) {
                    throw ParseError(e.kind(), epath + ": " + e.what(), 0, 0, src);
                }
            }
        }
        c.boundaries.push_back(std::move(m));
    }
    const ComplexCheck chk = complex_validate(c);
    if (!chk.valid)
        throw ParseError(ErrorKind::InvalidComplex, chk.failure, 0, 0, src);
    return c;
}

}  // namespace gslab
