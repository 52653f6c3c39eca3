#pragma once

#include "peis/eisenstein.hpp"
#include "peis/iwasawa.hpp"
#include "peis/lfunctions.hpp"
#include "peis/measures.hpp"

#include <json.hpp>

#include <string>

namespace peis {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const PadicInt& x);
Json to_json(const CyclotomicValue& x);
Json to_json(const DirichletCharacter& chi);
Json to_json(const LambdaElement& f);
Json to_json(const GroupRingElement& g);
Json to_json(const WeierstrassData& w);
Json to_json(const LpResult& r);
Json to_json(const WeightLabel& w);
Json to_json(const RationalQExpansion& f);
Json to_json(const PadicQExpansion& f);
Json to_json(const LambdaQExpansion& f);
Json to_json(const ProfiniteSpace& space);
Json to_json(const BoundednessCertificate& cert);
Json to_json(const CompatibilityReport& report);
/// Every level's values, with the boundedness certificate for p = space.p.
Json to_json(const Distribution& mu);
Json to_json(const ValuationReport& report);

Rational rational_from_json(const Json& j);
PadicInt padic_from_json(const Json& j);
LambdaElement lambda_from_json(const Json& j);
DirichletCharacter character_from_json(const Json& j);

/// "n,v_p(a_n)" rows for congruence audits; "inf" marks a zero coefficient.
std::string valuation_csv(const ValuationReport& report);

}  // namespace peis
