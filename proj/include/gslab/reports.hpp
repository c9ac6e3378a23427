#pragma once

#include <cstdint>

#include "gslab/abelian.hpp"
#include "gslab/chain_complex.hpp"
#include "gslab/fox.hpp"
#include "gslab/freesolv.hpp"
#include "gslab/milnor.hpp"
#include "gslab/nilpotent.hpp"
#include "gslab/verdicts.hpp"
#include "json.hpp"

namespace gslab {

using Json = nlohmann::ordered_json;

// Every report object carries a top-level boolean "falsification".
Json to_json(const QMatrix& m);
Json to_json(const LaurentMatrix& m);
Json to_json(const Hypothesis& h);
Json to_json(const H1RationalMap& m);
Json to_json(const GrMapReport& r);
Json to_json(const StallingsReport& r);
Json to_json(const DwyerReport& r);
Json to_json(const CEReport& r);
Json to_json(const MonoCertificate& c);
Json to_json(const StrebelReport& r);
Json to_json(const EulerReport& r);
Json to_json(const QuotientBound& r);
Json to_json(const TwoConnectedReport& r);
Json to_json(const FreeSolvableReport& r);
Json to_json(const MilnorTable& t);
Json to_json(const FuzzSummary& s);

Json abel_report(const Presentation& p, const AbelianizationData& a);
Json lcs_report(const NilpotentQuotientData& nqd);
Json alex_rank_report(const Presentation& p, const AlexanderComplex& c, int rank);
Json dwyer_dim_report(const Presentation& p, int n, std::int64_t value, std::int64_t crosscheck);
Json ccx_report(const FreeComplex& c, const StrebelReport& s, const EulerReport& e);

}  // namespace gslab
