#pragma once

#include <json.hpp>

#include "twocyc/certify.hpp"
#include "twocyc/dynamics.hpp"
#include "twocyc/ideal_checks.hpp"
#include "twocyc/stability.hpp"

namespace twocyc {

const char* version();

using Json = nlohmann::ordered_json;

// Report envelope shared by every command: exact inputs, version and budgets
// embedded for reproducibility. Tests consume the JSON; the text renderings
// derive from the same values.
Json report_envelope(const std::string& command, Json inputs, Json result,
                     long budget_seconds, const std::string& status,
                     long elapsed_ms);

Json to_json(const Certificate& cert);
Json to_json(const OrbitReport& rep);
Json to_json(const StaircaseResult& res);
Json to_json(const UpperHypothesesResult& res);
Json to_json(const LradResult& res);
Json constants_to_json(const ConstantsTable& table);

}  // namespace twocyc
