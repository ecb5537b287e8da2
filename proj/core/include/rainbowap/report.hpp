#pragma once

#include "rainbowap/counting.hpp"
#include "rainbowap/extremal.hpp"
#include "rainbowap/templates.hpp"

#include <json.hpp>

#include <string>

namespace rainbowap {

// Field order is fixed so that identical inputs give byte-identical output.
// Counts serialize as decimal strings; stable = true drops wall-clock fields
// for golden-file comparison.
using Json = nlohmann::ordered_json;

std::string rat_string(const BigRat& v);  // "p/q"

Json report_json(const CountReport& rep, bool stable);
Json report_json(const RatioReport& rep, bool stable);
Json report_json(const ScanResult& rep, bool stable);
Json report_json(const AwResult& rep, bool stable);
Json report_json(const CyclicCompareReport& rep, bool stable);
Json report_json(const SidonReport& rep, bool stable);
Json report_json(const TemplateStatistic& rep);

CountReport count_report_from_json(const Json& j);

}  // namespace rainbowap
