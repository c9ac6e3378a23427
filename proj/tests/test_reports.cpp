#include "doctest.h"
#include "gslab/reports.hpp"

using namespace gslab;

namespace {

const Presentation kF2 = parse_presentation("gens x y");
const Presentation kNil3 = parse_presentation("gens x y\nrel x y x^-1 y^-1 y y x y^-1 x^-1 y^-1");

std::vector<Json> sample_reports()
{
    const GroupHom q = parse_hom("map x -> x\nmap y -> y", kF2, kNil3);
    const NilpotentQuotientData d = truncated_quotient(kNil3, 3);
    const AlexanderComplex ac = alexander_complex(kNil3);
    const FreeComplex fc = FreeComplex::from_alexander(ac);
    const LinkData hopf = parse_link("components 2\nmeridian 1 a\nmeridian 2 b\nlongitude 1 b\nlongitude 2 a\n");
    return {
        abel_report(kNil3, abelianization(kNil3)),
        lcs_report(d),
        alex_rank_report(kNil3, ac, h1_rank(ac)),
        dwyer_dim_report(kNil3, 3, dwyer_quotient_dim(kNil3, 3), dwyer_quotient_dim_crosscheck(kNil3, 3)),
        to_json(stallings_rational_verdict(q, 3)),
        to_json(dwyer_rational_verdict(q, 3)),
        to_json(metabelian_mono_certificate(q)),
        to_json(two_connected_torsion_check(q, std::nullopt, false)),
        ccx_report(fc, strebel_audit(fc), euler_characteristic_report(fc)),
        to_json(freesolvable_hypotheses(parse_subset("x\ny\n", kNil3), 2)),
        to_json(mu_table(hopf, 3)),
        to_json(fuzz_strebel(20, 5, 5)),
    };
}

}  // namespace

TEST_CASE("every report round-trips and carries a falsification flag")
{
    for (const Json& j : sample_reports()) {
        REQUIRE(j.contains("falsification"));
        CHECK(j["falsification"].is_boolean());
        CHECK_FALSE(j["falsification"].get<bool>());
        const std::string text = j.dump(2);
        CHECK(Json::parse(text) == j);
        CHECK(Json::parse(text).dump(2) == text);
    }
}

TEST_CASE("reports are deterministic")
{
    const auto a = sample_reports(), b = sample_reports();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i].dump() == b[i].dump());
}

TEST_CASE("report contents")
{
    const Json lcs = lcs_report(truncated_quotient(kF2, 4));
    CHECK(lcs["l"] == Json::array({2, 1, 2, 3}));
    const Json ab = abel_report(kF2, abelianization(kF2));
    CHECK(ab["free_rank"] == 2);
}
