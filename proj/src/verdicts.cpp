#include "gslab/verdicts.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "gslab/error.hpp"
#include "gslab/nilpotent.hpp"

namespace gslab {

std::string to_string(GrVerdict v)
{
    switch (v) {
    case GrVerdict::Iso: return "iso";
    case GrVerdict::Mono: return "mono";
    case GrVerdict::Epi: return "epi";
    case GrVerdict::Neither: return "neither";
    }
    return "?";
}

GrVerdict classify(std::int64_t rank, std::int64_t source_dim, std::int64_t target_dim)
{
    const bool mono = rank == source_dim;
    const bool epi = rank == target_dim;
    if (mono && epi)
        return GrVerdict::Iso;
    if (mono)
        return GrVerdict::Mono;
    if (epi)
        return GrVerdict::Epi;
    return GrVerdict::Neither;
}

bool GrMapReport::iso_through(int k) const
{
    for (const auto& d : degrees)
        if (d.k <= k && d.verdict != GrVerdict::Iso)
            return false;
    return k <= q;
}

std::optional<int> GrMapReport::first_non_iso() const
{
    for (const auto& d : degrees)
        if (d.verdict != GrVerdict::Iso)
            return d.k;
    return std::nullopt;
}

GrMapReport induced_gr_maps(const GroupHom& h, int q)
{
    const WellDefinedVerdict wd = hom_welldefined_upto(h, q);
    if (!wd.certified)
        throw Error(ErrorKind::NotWellDefined,
                    "source relator " + std::to_string(*wd.failing_relator + 1) +
                        " does not map into the target relator ideal modulo degree " + std::to_string(q + 1));
    const NilpotentQuotientData na = truncated_quotient(h.source, q);
    const NilpotentQuotientData nb = truncated_quotient(h.target, q);
    const LieModel la = extract_graded_lie(na, q);
    const LieModel lb = extract_graded_lie(nb, q);
    auto lie_maps = induced_lie_maps(h, la, lb, nb, q);
    const auto alg_maps = induced_algebra_maps(h, na, nb, q);

    GrMapReport rep;
    rep.q = q;
    for (int k = 1; k <= q; ++k) {
        const auto i = static_cast<std::size_t>(k) - 1;
        GrDegree d;
        d.k = k;
        d.a_src = na.a[i];
        d.a_tgt = nb.a[i];
        d.l_src = na.l[i];
        d.l_tgt = nb.l[i];
        d.lie_rank = static_cast<std::int64_t>(rank(lie_maps[i]));
        d.algebra_rank = static_cast<std::int64_t>(rank(alg_maps[i]));
        d.verdict = classify(d.lie_rank, d.l_src, d.l_tgt);
        d.algebra_verdict = classify(d.algebra_rank, d.a_src, d.a_tgt);
        d.lie_matrix = std::move(lie_maps[i]);
        rep.degrees.push_back(std::move(d));
    }
    return rep;
}

std::string to_string(HypothesisStatus s)
{
    switch (s) {
    case HypothesisStatus::Verified: return "verified";
    case HypothesisStatus::Assumed: return "assumed";
    case HypothesisStatus::Unknown: return "unknown";
    case HypothesisStatus::Failed: return "failed";
    }
    return "?";
}

Hypothesis h2_epi_hypothesis(const GroupHom& h, bool assume)
{
    if (h.source == h.target && h.is_identity())
        return {HypothesisStatus::Verified, "identity map"};
    if (h2_complex_dim(h.target) == 0)
        return {HypothesisStatus::Verified, "target presentation complex has no rational 2-cycles"};
    if (assume)
        return {HypothesisStatus::Assumed, "asserted by the user"};
    return {HypothesisStatus::Unknown, "H2 of the target may be nonzero and no certificate was given"};
}

namespace {

Hypothesis h1_iso_hypothesis(const H1RationalMap& m)
{
    if (m.isomorphism())
        return {HypothesisStatus::Verified, "induced map on H1(-;Q) has full rank " + std::to_string(m.image_dim)};
    return {HypothesisStatus::Failed, "H1(-;Q) map has rank " + std::to_string(m.image_dim) + " between dimensions " +
                                          std::to_string(m.source_dim) + " and " + std::to_string(m.target_dim)};
}

// Lambda^2 of a linear map given by per-basis images (global target indices).
SparseVector wedge_image(const std::vector<SparseVector>& image, int i, int j, int target_dim)
{
    std::map<std::uint32_t, Rational> acc;
    for (const auto& a : image[static_cast<std::size_t>(i)].entries())
        for (const auto& b : image[static_cast<std::size_t>(j)].entries()) {
            const int x = static_cast<int>(a.index);
            const int y = static_cast<int>(b.index);
            if (x == y)
                continue;
            const int lo = std::min(x, y), hi = std::max(x, y);
            const auto idx = static_cast<std::uint32_t>(lo * target_dim - lo * (lo + 1) / 2 + (hi - lo - 1));
            acc[idx] += (x < y ? 1 : -1) * a.value * b.value;
        }
    SparseVector r;
    for (const auto& [k, c] : acc)
        if (c != 0)
            r.push_back(k, c);
    return r;
}

}  // namespace

StallingsReport stallings_rational_verdict(const GroupHom& h, int q, bool assume_h2_epi)
{
    StallingsReport rep;
    rep.h1 = induced_h1_rational(h);
    rep.h1_iso = h1_iso_hypothesis(rep.h1);
    rep.h2_epi = h2_epi_hypothesis(h, assume_h2_epi);
    rep.gr = induced_gr_maps(h, q);
    rep.hypotheses_hold = rep.h1_iso.holds() && rep.h2_epi.holds();
    rep.conclusion_holds = rep.gr.iso_through(q);
    // An assumed hypothesis that leads to a failed conclusion refutes the assumption,
    // not the implementation.
    const bool verified =
        rep.h1_iso.status == HypothesisStatus::Verified && rep.h2_epi.status == HypothesisStatus::Verified;
    rep.falsification = verified && !rep.conclusion_holds;
    rep.assumption_refuted = rep.hypotheses_hold && !verified && !rep.conclusion_holds;
    return rep;
}

DwyerReport dwyer_rational_verdict(const GroupHom& h, int n, const DwyerOptions& options)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "Dwyer level must be >= 1");
    DwyerReport rep;
    rep.n = n;
    if (options.group_h2) {
        if (!h.source.aspherical || !h.target.aspherical)
            throw Error(ErrorKind::RequiresAsphericalFlag,
                        "group H2 needs both presentations flagged aspherical");
        rep.group_h2_src = h2_complex_dim(h.source);
        rep.group_h2_tgt = h2_complex_dim(h.target);
    }
    rep.h1 = induced_h1_rational(h);
    rep.gr = induced_gr_maps(h, n);

    const NilpotentQuotientData na = truncated_quotient(h.source, n);
    const NilpotentQuotientData nb = truncated_quotient(h.target, n);
    const LieModel la = extract_graded_lie(na, n);
    const LieModel lb = extract_graded_lie(nb, n);

    bool homology_ok = true;
    for (int k = 1; k <= n; ++k) {
        DwyerLevel lvl;
        lvl.k = k;
        lvl.src = ce_h1_h2(la.lie.truncate(k));
        lvl.tgt = ce_h1_h2(lb.lie.truncate(k));
        lvl.homology_iso = lvl.src.h1 == lvl.tgt.h1 && lvl.src.h2 == lvl.tgt.h2;
        homology_ok = homology_ok && lvl.homology_iso;
        rep.levels.push_back(lvl);
    }
    rep.side1 = rep.gr.iso_through(n) && homology_ok;

    if (n == 1) {
        rep.side2 = true;
    } else {
        rep.quotient_dim_src = dwyer_quotient_dim(h.source, n);
        rep.quotient_dim_tgt = dwyer_quotient_dim(h.target, n);
        const DwyerSpaces sa = dwyer_spaces(la.lie, n);
        const DwyerSpaces sb = dwyer_spaces(lb.lie, n);
        // Images of the source basis of L_{<n} under the induced Lie map.
        const auto maps = induced_lie_maps(h, la, lb, nb, n - 1);
        std::vector<SparseVector> image;
        for (int k = 1; k < n; ++k) {
            const QMatrix& mk = maps[static_cast<std::size_t>(k) - 1];
            const auto off = static_cast<std::uint32_t>(lb.lie.offset(k));
            for (std::size_t r = 0; r < mk.rows(); ++r) {
                SparseVector v;
                for (std::size_t c = 0; c < mk.cols(); ++c)
                    v.push_back(off + static_cast<std::uint32_t>(c), mk(r, c));
                image.push_back(std::move(v));
            }
        }
        const int dim_b = lb.lie.offset(n);
        std::vector<SparseVector> pair_image;
        for (const auto& [i, j] : sa.pairs)
            pair_image.push_back(wedge_image(image, i, j, dim_b));
        EchelonBasis span;
        for (const auto& kappa : sa.kernel) {
            SparseVector v;
            for (const auto& e : kappa.entries())
                v.add_scaled(pair_image[e.index], e.value);
            span.insert(v);
        }
        for (const auto& b : sb.boundaries)
            span.insert(b);
        rep.side2 = true;
        for (const auto& kappa : sb.kernel)
            if (!span.contains(kappa)) {
                rep.side2 = false;
                break;
            }
    }

    if (!rep.h1.isomorphism()) {
        rep.status = "h1 hypothesis fails";
    } else if (rep.side1 == rep.side2) {
        rep.status = "consistent";
    } else if (rep.side1) {
        rep.status = "contradiction";
        rep.falsification = true;
    } else {
        rep.status = "inconclusive (graded model)";
    }
    return rep;
}

}  // namespace gslab
