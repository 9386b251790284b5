#pragma once

#include <json.hpp>

#include "folia/foliation.hpp"
#include "folia/newton.hpp"
#include "folia/selfcheck.hpp"

namespace folia::cli {

using Json = nlohmann::ordered_json;

// Rationals serialize as "p/q" strings, never floats; index sets are
// 1-based in JSON.
Json rational_json(const Rational& r);
Json lambda_json(const LambdaVector& lambda);
Json index_set_json(const IndexSet& s);
IndexSet index_set_from_json(const Json& j, int dimension);

Json certificate_json(const Certificate& cert, int dimension);
Certificate certificate_from_json(const Json& j, int dimension);

Json lct_result_json(const LctResult& result);
LctResult lct_result_from_json(const Json& j);

Json membership_json(const MembershipResult& result);

Json suite_result_json(const SuiteResult& result);

}  // namespace folia::cli
