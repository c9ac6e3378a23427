// Acceptance gate: one PASS/FAIL line per criterion, exact arithmetic throughout.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gslab/chain_complex.hpp"
#include "gslab/fox.hpp"
#include "gslab/lie.hpp"
#include "gslab/milnor.hpp"
#include "gslab/nilpotent.hpp"
#include "gslab/verdicts.hpp"
#include "oracles.hpp"

using namespace gslab;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

const char* kNil3 = "gens x y\nrel x y x^-1 y^-1 y y x y^-1 x^-1 y^-1";
const char* kMeta =
    "gens x y\nrel x y x^-1 y^-1 y x y x^-1 y^-1 x y^-1 x^-1 y x y^-1 x^-1 x y x^-1 y x y^-1 x^-1 y^-1";
const char* kTrefoil = "gens a b\nrel a b a b^-1 a^-1 b^-1\nflag aspherical";
const char* kHopfGroup = "gens a b\nrel a b a^-1 b^-1\nflag aspherical";

Outcome witt_consistency()
{
    Outcome o;
    for (int m = 2; m <= 3; ++m) {
        const int q = m == 2 ? 6 : 5;
        const NilpotentQuotientData d = truncated_quotient(Presentation::free_group(m), q);
        for (int k = 1; k <= q; ++k) {
            const std::int64_t expect = oracle::lyndon_count(m, k);
            o.require(witt(m, k) == expect, "witt(" + std::to_string(m) + "," + std::to_string(k) + ")");
            o.require(d.l[static_cast<std::size_t>(k - 1)] == expect,
                      "l_" + std::to_string(k) + " for m=" + std::to_string(m));
        }
    }
    return o;
}

Outcome free_h2_identity()
{
    Outcome o;
    const Presentation f2 = Presentation::free_group(2);
    for (int n = 2; n <= 5; ++n) {
        const LieModel lm = extract_graded_lie(truncated_quotient(f2, n - 1), n - 1);
        const CEReport ce = ce_h1_h2(lm.lie);
        o.require(ce.boundary_squared_zero, "d2 d3 != 0 at n=" + std::to_string(n));
        o.require(ce.h2 == oracle::lyndon_count(2, n), "H2 at n=" + std::to_string(n));
    }
    return o;
}

Outcome dwyer_free()
{
    Outcome o;
    for (int m = 1; m <= 3; ++m)
        for (int n = 2; n <= 4; ++n) {
            const Presentation f = Presentation::free_group(m);
            o.require(dwyer_quotient_dim(f, n) == 0, "m=" + std::to_string(m) + " n=" + std::to_string(n));
            o.require(dwyer_quotient_dim_crosscheck(f, n) == 0,
                      "crosscheck m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    return o;
}

Outcome level_one_ranks()
{
    Outcome o;
    for (int m = 1; m <= 5; ++m)
        o.require(h1_rank_abelian_cover(Presentation::free_group(m)) == m - 1, "F_" + std::to_string(m));
    o.require(h1_rank_abelian_cover(parse_presentation(kTrefoil)) == 0, "trefoil");
    o.require(h1_rank_abelian_cover(parse_presentation(kHopfGroup)) == 0, "Hopf link");
    return o;
}

Outcome strebel_fuzz()
{
    Outcome o;
    const FuzzSummary s = fuzz_strebel(1000, 20240601, 0);
    o.require(s.instances == 1000, "instance count");
    o.require(s.invalid_generated == 0, "generator produced an invalid complex");
    o.require(s.strebel_violations == 0, std::to_string(s.strebel_violations) + " rank violations");
    o.require(s.euler_violations == 0, std::to_string(s.euler_violations) + " Euler violations");
    return o;
}

Outcome quotient_bound()
{
    Outcome o;
    const FuzzSummary s = fuzz_strebel(0, 777, 200);
    o.require(s.quotient_instances == 200, "instance count");
    o.require(s.quotient_violations == 0, std::to_string(s.quotient_violations) + " violations");
    return o;
}

Outcome verdict_regression()
{
    Outcome o;
    const Presentation f1 = Presentation::free_group(1);
    const Presentation f2 = parse_presentation("gens x y");
    const Presentation nil3 = parse_presentation(kNil3);
    const Presentation meta = parse_presentation(kMeta);
    const Presentation tre = parse_presentation(kTrefoil);
    const Presentation z2 = parse_presentation(kHopfGroup);
    int falsifications = 0;

    for (const Presentation* p : {&f1, &f2, &nil3, &meta, &tre, &z2}) {
        const GroupHom id = GroupHom::identity(*p);
        const StallingsReport s = stallings_rational_verdict(id, 5);
        o.require(s.hypotheses_hold && s.conclusion_holds, "identity stallings");
        falsifications += s.falsification;
        for (int n = 1; n <= 3; ++n) {
            const DwyerReport d = dwyer_rational_verdict(id, n);
            o.require(d.side1 && d.side2, "identity dwyer");
            falsifications += d.falsification;
        }
        o.require(metabelian_mono_certificate(id).rank_preserved, "identity certificate");
        const TwoConnectedReport t = two_connected_torsion_check(id, std::nullopt, false);
        o.require(t.kernel_rank == 0 && t.cokernel_rank == 0, "identity torsion check");
        falsifications += t.falsification;
    }

    const GroupHom xc = parse_hom("map x -> x x y x^-1 y^-1\nmap y -> y", f2, f2);
    const StallingsReport sx = stallings_rational_verdict(xc, 5);
    o.require(sx.hypotheses_hold && sx.conclusion_holds, "x[x,y] stallings");
    o.require(induced_gr_maps(xc, 4).iso_through(4), "x[x,y] gr iso");
    o.require(induced_alexander_map(xc).image_rank == 1, "x[x,y] level-one image rank");
    falsifications += sx.falsification;

    const GroupHom q3 = parse_hom("map x -> x\nmap y -> y", f2, nil3);
    const GrMapReport g3 = induced_gr_maps(q3, 3);
    o.require(g3.degrees[0].verdict == GrVerdict::Iso && g3.degrees[1].verdict == GrVerdict::Iso &&
                  g3.degrees[2].verdict == GrVerdict::Epi && g3.degrees[2].l_src == 2 && g3.degrees[2].l_tgt == 1,
              "F2 -> <x,y|[[x,y],y]> gr verdicts");
    const DwyerReport d2 = dwyer_rational_verdict(q3, 2);
    o.require(d2.gr.iso_through(2) && d2.side1, "Dwyer n=2 condition 1");
    const DwyerReport d3 = dwyer_rational_verdict(q3, 3);
    o.require(!d3.gr.iso_through(3) && d3.quotient_dim_src == 0 && d3.quotient_dim_tgt == 1 && !d3.side2,
              "Dwyer n=3 mismatch");
    falsifications += d2.falsification + d3.falsification;

    const GroupHom qm = parse_hom("map x -> x\nmap y -> y", f2, meta);
    const MonoCertificate cm = metabelian_mono_certificate(qm);
    o.require(cm.rank_preserved && cm.source_rank == 1 && cm.image_rank == 1, "F2 -> meta certificate");
    o.require(induced_gr_maps(qm, 4).iso_through(4), "F2 -> meta gr iso through 4");

    const GroupHom mer = parse_hom("map x1 -> a", f1, tre);
    const InducedAlexanderMap am = induced_alexander_map(mer);
    o.require(am.source_rank == 0 && am.target_rank == 0 && am.image_rank == 0, "F1 -> trefoil level one");
    const FreeComplex cone = mapping_cone(alexander_chain_map(am));
    o.require(homology_rank(cone, 1) == 0 && homology_rank(cone, 2) == 0, "F1 -> trefoil cone");

    const GroupHom ab = parse_hom("map x -> a\nmap y -> b", f2, z2);
    const MonoCertificate cz = metabelian_mono_certificate(ab);
    o.require(!cz.rank_preserved && cz.source_rank == 1 && cz.image_rank == 0, "F2 -> Z2 certificate");
    const StallingsReport sz = stallings_rational_verdict(ab, 3);
    o.require(!sz.hypotheses_hold && sz.h2_epi.status == HypothesisStatus::Unknown && sz.gr.first_non_iso() == 2,
              "F2 -> Z2 stallings");
    const TwoConnectedReport tz = two_connected_torsion_check(ab, parse_gamma("1,0;0,1", z2), false);
    o.require(tz.kernel_rank == 1 && tz.cokernel_rank == 0, "F2 -> Z2 torsion check");
    falsifications += sz.falsification + tz.falsification;

    o.require(falsifications == 0, std::to_string(falsifications) + " falsification events");
    return o;
}

Outcome milnor_values()
{
    Outcome o;
    const LinkData hopf = parse_link("components 2\nmeridian 1 a\nmeridian 2 b\nlongitude 1 b\nlongitude 2 a\n");
    const MuBar h = mu_bar(hopf, {1, 2});
    o.require(h.value == 1 && h.delta == 0, "Hopf mu(12)");

    const LinkData bor = parse_link("components 3\nmeridian 1 x1\nmeridian 2 x2\nmeridian 3 x3\n"
                                    "longitude 1 x2 x3 x2^-1 x3^-1\nlongitude 2 x3 x1 x3^-1 x1^-1\n"
                                    "longitude 3 x1 x2 x1^-1 x2^-1\n");
    const MilnorTable bt = mu_table(bor, 3);
    o.require(bt.entries.at({2, 3, 1}).value == 1 && bt.entries.at({2, 3, 1}).delta == 0, "Borromean mu(231)");
    for (const auto& [idx, v] : bt.entries)
        if (idx.size() == 2)
            o.require(v.value == 0, "Borromean length-2 value");

    const LinkData un = parse_link("components 2\nmeridian 1 x1\nmeridian 2 x2\nlongitude 1\nlongitude 2\n");
    for (const auto& [idx, v] : mu_table(un, 4).entries)
        o.require(v.value == 0 && v.delta == 0, "unlink");

    const LinkData wir = parse_link("components 2\nmeridian 1 a1\nmeridian 2 b1\nconj a2 = b1 | base a1\n"
                                    "conj b2 = a1 | base b1\nlongitude 1 b2\nlongitude 2 a2\n");
    for (const LinkData* l : {&hopf, &bor, &un, &wir}) {
        const MilnorTable t = mu_table(*l, 3);
        for (int i = 1; i <= l->m; ++i)
            for (int j = 1; j <= l->m; ++j)
                o.require(t.entries.at({i, j}).value == t.entries.at({j, i}).value, "linking symmetry");
    }
    return o;
}

Outcome two_connected_desk_case()
{
    Outcome o;
    const Presentation tre = parse_presentation(kTrefoil);
    const GroupHom mer = parse_hom("map x1 -> a", Presentation::free_group(1), tre);
    const TwoConnectedReport r = two_connected_torsion_check(mer, parse_gamma("1;1", tre), false);
    o.require(r.kernel_rank == 0, "kernel rank " + std::to_string(r.kernel_rank));
    o.require(r.cokernel_rank == 0, "cokernel rank " + std::to_string(r.cokernel_rank));
    o.require(!r.falsification, "falsification");
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"Witt consistency of lcs on free groups", witt_consistency},
        {"CE H2 of free class n-1 models equals witt(2,n)", free_h2_identity},
        {"Dwyer quotient dimension vanishes on free groups", dwyer_free},
        {"level-one ranks of F_m, trefoil and Hopf link", level_one_ranks},
        {"rank inequality and Euler audit on 1000 complexes", strebel_fuzz},
        {"quotient rank bound on 200 instances", quotient_bound},
        {"curated homomorphism verdicts", verdict_regression},
        {"Milnor invariants of Hopf, Borromean and unlink data", milnor_values},
        {"two-connected torsion check, F1 -> trefoil", two_connected_desk_case},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %zu: %s  %s (%.2fs)%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    secs, o.pass ? "" : ": ", o.detail.c_str());
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
