#pragma once

// JSON report v1. One object per invocation:
//   { "command", "params", "result", "indexing": "0-based", "toolVersion", "elapsedMillis" }
// Every numeric field is a JSON integer.

#include <string>

#include "json.hpp"
#include "zerosum/constructions.hpp"
#include "zerosum/formulas.hpp"
#include "zerosum/good_shift.hpp"
#include "zerosum/oracle.hpp"
#include "zerosum/scanners.hpp"

namespace zerosum {

using json = nlohmann::json;

json to_json(const Params& params);
json to_json(const BoundReport& rep);
json to_json(const SufficientBound& bound);
json to_json(const ScanReport& rep, bool verbose = false);
json to_json(const GoodShift& shift);
json to_json(const ShiftSearch& search);
json to_json(const ThresholdResult& res);
json to_json(const Construction& c);
json to_json(const TwoKVerdict& v);
json to_json(const RigidityVerdict& v);
json to_json(const ResidueLemmaVerdict& v);

json make_report(const std::string& command, json params, json result, long long elapsed_millis);

/// True when every number anywhere in the document is an integer.
bool integers_only(const json& doc);

}  // namespace zerosum
