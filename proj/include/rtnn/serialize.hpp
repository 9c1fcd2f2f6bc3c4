#pragma once

#include <nlohmann/json.hpp>

#include "rtnn/audit.hpp"
#include "rtnn/exact_linalg.hpp"
#include "rtnn/flag.hpp"
#include "rtnn/richardson.hpp"
#include "rtnn/weyl.hpp"

namespace rtnn {

using Json = nlohmann::json;

Json to_json(const Mat& m);
/// Row-major array of rational strings. Throws ParseError.
Mat mat_from_json(const Json& j);

Json to_json(const BorelPt& b);  // {"borel_rep": [...]}
Json to_json(const Chart& chart);
Json to_json(const ClassifyResult& result);
Json to_json(const AuditReport& report);

}  // namespace rtnn
