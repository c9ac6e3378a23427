#include "gslab/reports.hpp"

namespace gslab {

namespace {

Json rational(const Rational& q) { return q.get_str(); }

Json verdict_line(const GrDegree& d)
{
    return Json{{"k", d.k},
                {"a_src", d.a_src},
                {"a_tgt", d.a_tgt},
                {"l_src", d.l_src},
                {"l_tgt", d.l_tgt},
                {"rank", d.lie_rank},
                {"verdict", to_string(d.verdict)},
                {"algebra_rank", d.algebra_rank},
                {"algebra_verdict", to_string(d.algebra_verdict)},
                {"matrix", to_json(d.lie_matrix)}};
}

Json ce_line(const CEReport& r) { return Json{{"h1", r.h1}, {"h2", r.h2}}; }

}  // namespace

Json to_json(const QMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(rational(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const LaurentMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const Hypothesis& h) { return Json{{"status", to_string(h.status)}, {"reason", h.reason}}; }

Json to_json(const H1RationalMap& m)
{
    return Json{{"source_dim", m.source_dim},
                {"target_dim", m.target_dim},
                {"image_dim", m.image_dim},
                {"injective", m.injective()},
                {"surjective", m.surjective()}};
}

Json to_json(const GrMapReport& r)
{
    Json degrees = Json::array();
    for (const auto& d : r.degrees)
        degrees.push_back(verdict_line(d));
    return Json{{"q", r.q}, {"level", "associated graded"}, {"degrees", degrees}};
}

Json to_json(const StallingsReport& r)
{
    Json j;
    j["report"] = "stallings";
    j["degrees"] = to_json(r.gr)["degrees"];
    j["hypotheses"] = Json{{"h1_iso", to_json(r.h1_iso)}, {"h2_epi", to_json(r.h2_epi)}, {"h1", to_json(r.h1)}};
    j["hypotheses_hold"] = r.hypotheses_hold;
    j["conclusion_holds"] = r.conclusion_holds;
    if (auto k = r.gr.first_non_iso())
        j["first_failure_degree"] = *k;
    else
        j["first_failure_degree"] = nullptr;
    j["assumption_refuted"] = r.assumption_refuted;
    j["falsification"] = r.falsification;
    return j;
}

Json to_json(const DwyerReport& r)
{
    Json j;
    j["report"] = "dwyer";
    j["model"] = "graded";
    j["n"] = r.n;
    j["degrees"] = to_json(r.gr)["degrees"];
    Json levels = Json::array();
    for (const auto& l : r.levels)
        levels.push_back(Json{{"k", l.k}, {"src", ce_line(l.src)}, {"tgt", ce_line(l.tgt)}, {"homology_iso", l.homology_iso}});
    j["quotient_homology"] = levels;
    j["hypotheses"] = Json{{"h1", to_json(r.h1)}};
    j["dwyer_quotient_dim"] = Json{{"src", r.quotient_dim_src}, {"tgt", r.quotient_dim_tgt}};
    if (r.group_h2_src)
        j["group_h2"] = Json{{"src", *r.group_h2_src}, {"tgt", *r.group_h2_tgt}, {"source", "aspherical flag"}};
    j["side1"] = Json{{"holds", r.side1}, {"label", "computed"}};
    j["side2"] = Json{{"holds", r.side2}, {"label", "computed (graded model)"}};
    j["status"] = r.status;
    j["falsification"] = r.falsification;
    return j;
}

Json to_json(const CEReport& r)
{
    return Json{{"h1", r.h1},
                {"h2", r.h2},
                {"dim_l", r.dim_l},
                {"dim_wedge2", r.dim_wedge2},
                {"dim_wedge3", r.dim_wedge3},
                {"rank_d2", r.rank_d2},
                {"rank_d3", r.rank_d3},
                {"boundary_squared_zero", r.boundary_squared_zero}};
}

Json to_json(const MonoCertificate& c)
{
    return Json{{"report", "meta-mono"},
                {"verdict", c.rank_preserved ? "rank_preserved" : "rank_dropped"},
                {"source_rank", c.source_rank},
                {"image_rank", c.image_rank},
                {"coefficients_injective", c.coefficients_injective},
                {"falsification", false}};
}

Json to_json(const StrebelReport& r)
{
    Json lines = Json::array();
    for (const auto& l : r.lines)
        lines.push_back(Json{{"p", l.p}, {"lambda_rank", l.lambda_rank}, {"q_dim", l.q_dim}, {"ok", l.ok}});
    return Json{{"lines", lines}, {"falsification", r.falsification}};
}

Json to_json(const EulerReport& r)
{
    return Json{{"from_ranks", r.from_ranks},
                {"from_lambda", r.from_lambda},
                {"from_q", r.from_q},
                {"falsification", r.falsification}};
}

Json to_json(const QuotientBound& r)
{
    return Json{{"p", r.p},
                {"cycles", r.cycles},
                {"k_lambda", r.k_lambda},
                {"k_q", r.k_q},
                {"original_lambda", r.original_lambda},
                {"original_q", r.original_q},
                {"cycles_unchanged", r.cycles_unchanged},
                {"falsification", r.falsification}};
}

Json to_json(const TwoConnectedReport& r)
{
    Json gamma = Json::array();
    for (std::size_t i = 0; i < r.gamma.generator_images.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < r.gamma.generator_images.cols(); ++k)
            row.push_back(r.gamma.generator_images(i, k).get_si());
        gamma.push_back(row);
    }
    return Json{{"report", "two-conn"},
                {"gamma", gamma},
                {"hypotheses",
                 Json{{"h1", to_json(r.h1)},
                      {"h1_mono", to_json(r.h1_mono)},
                      {"h1_iso", to_json(r.h1_iso)},
                      {"h2_span", to_json(r.h2_span)}}},
                {"source_rank", r.source_rank},
                {"target_rank", r.target_rank},
                {"image_rank", r.image_rank},
                {"kernel_rank", r.kernel_rank},
                {"cokernel_rank", r.cokernel_rank},
                {"kernel_torsion", r.kernel_rank == 0},
                {"cokernel_torsion", r.cokernel_rank == 0},
                {"kernel_conclusion_applies", r.kernel_conclusion_applies},
                {"cokernel_conclusion_applies", r.cokernel_conclusion_applies},
                {"cone", Json{{"lambda_ranks", r.cone_lambda},
                              {"q_dims", r.cone_q},
                              {"les_consistent", r.les_consistent},
                              {"strebel_ok", r.cone_strebel_ok}}},
                {"assumption_refuted", r.assumption_refuted},
                {"falsification", r.falsification}};
}

Json to_json(const FreeSolvableReport& r)
{
    Json j{{"report", "freesolv"},
           {"n", r.n},
           {"elements", r.elements},
           {"h1_rank", r.h1_rank},
           {"independent", r.independent},
           {"hypotheses", Json{{"h2", to_json(r.h2_hypothesis)}}},
           {"hypotheses_hold", r.hypotheses_hold}};
    j["probe"] = r.probe ? to_json(*r.probe) : Json(nullptr);
    j["falsification"] = false;
    return j;
}

Json to_json(const MilnorTable& t)
{
    Json rows = Json::array();
    for (const auto& idx : t.rows()) {
        const MuBar& e = t.entries.at(idx);
        rows.push_back(Json{{"I", format_multi_index(idx)}, {"value", e.value.get_str()}, {"delta", e.delta.get_str()}});
    }
    return Json{{"report", "milnor"},
                {"components", t.m},
                {"maxlen", t.maxlen},
                {"convention", "mu(i1..ik) = coefficient of X_i1..X_i(k-1) in the longitude of component ik; "
                               "delta = gcd over deletions followed by cyclic permutations"},
                {"table", rows},
                {"falsification", false}};
}

Json to_json(const FuzzSummary& s)
{
    return Json{{"report", "fuzz-strebel"},
                {"instances", s.instances},
                {"strebel_violations", s.strebel_violations},
                {"euler_violations", s.euler_violations},
                {"quotient_instances", s.quotient_instances},
                {"quotient_violations", s.quotient_violations},
                {"invalid_generated", s.invalid_generated},
                {"falsification", s.strebel_violations + s.euler_violations + s.quotient_violations +
                                          s.invalid_generated >
                                      0}};
}

Json abel_report(const Presentation& p, const AbelianizationData& a)
{
    Json torsion = Json::array();
    for (const auto& t : a.torsion_coefficients)
        torsion.push_back(t.get_str());
    return Json{{"report", "abel"},
                {"presentation", p.name},
                {"h1", a.describe()},
                {"free_rank", a.free_rank},
                {"torsion", torsion},
                {"falsification", false}};
}

Json lcs_report(const NilpotentQuotientData& nqd)
{
    return Json{{"report", "lcs"},
                {"presentation", nqd.presentation.name},
                {"q", nqd.q},
                {"a", nqd.a},
                {"l", nqd.l},
                {"falsification", false}};
}

Json alex_rank_report(const Presentation& p, const AlexanderComplex& c, int rank)
{
    return Json{{"report", "alex-rank"},
                {"presentation", p.name},
                {"b", c.b},
                {"d2", to_json(c.d2)},
                {"d1", to_json(c.d1)},
                {"h1_rank", rank},
                {"falsification", false}};
}

Json dwyer_dim_report(const Presentation& p, int n, std::int64_t value, std::int64_t crosscheck)
{
    return Json{{"report", "dwyer-dim"},
                {"presentation", p.name},
                {"n", n},
                {"model", "graded"},
                {"dim", value},
                {"crosscheck", crosscheck},
                {"falsification", value != crosscheck}};
}

Json ccx_report(const FreeComplex& c, const StrebelReport& s, const EulerReport& e)
{
    return Json{{"report", "ccx-audit"},
                {"vars", c.b},
                {"ranks", c.ranks},
                {"strebel", to_json(s)},
                {"euler", to_json(e)},
                {"falsification", s.falsification || e.falsification}};
}

}  // namespace gslab
