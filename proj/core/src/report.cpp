#include "rainbowap/report.hpp"

#include <cmath>

namespace rainbowap {

namespace {

Json subset_json(const std::vector<long long>& subset) {
  Json arr = Json::array();
  for (long long x : subset) arr.push_back(x);
  return arr;
}

Json rows_json(const std::vector<SubsetCount>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json j;
    j["subset"] = subset_json(row.subset);
    j["count"] = to_decimal(row.count);
    j["is_max"] = row.is_max;
    j["violation"] = row.violation;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json violations_json(const std::vector<std::vector<long long>>& violations) {
  Json arr = Json::array();
  for (const auto& v : violations) arr.push_back(subset_json(v));
  return arr;
}

}  // namespace

std::string rat_string(const BigRat& v) {
  return numerator(v).str() + "/" + denominator(v).str();
}

Json report_json(const CountReport& rep, bool stable) {
  Json j;
  j["ground"] = rep.ground;
  j["r"] = rep.r;
  j["k_or_pattern"] = rep.k_or_pattern;
  j["method"] = rep.method;
  j["count"] = to_decimal(rep.count);
  if (!stable) j["elapsed_ms"] = rep.elapsed_ms;
  j["nodes"] = rep.nodes;
  return j;
}

CountReport count_report_from_json(const Json& j) {
  CountReport rep;
  rep.ground = j.at("ground").get<std::string>();
  rep.r = j.at("r").get<int>();
  rep.k_or_pattern = j.at("k_or_pattern").get<std::string>();
  rep.method = j.at("method").get<std::string>();
  rep.count = parse_decimal(j.at("count").get<std::string>());
  rep.elapsed_ms = j.value("elapsed_ms", 0.0);
  rep.nodes = j.value("nodes", std::uint64_t{0});
  return rep;
}

Json report_json(const RatioReport& rep, bool stable) {
  Json j;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["k"] = rep.k;
  j["count"] = to_decimal(rep.count);
  j["ratio"] = rat_string(rep.ratio);
  j["ratio_decimal"] = rat_to_double(rep.ratio);
  j["lower"] = rat_string(rep.lower);
  j["lower_decimal"] = rat_to_double(rep.lower);
  j["target"] = to_decimal(rep.target);
  if (std::isnan(rep.error_term))
    j["error_term"] = nullptr;
  else
    j["error_term"] = rep.error_term;
  j["method"] = rep.method;
  if (!stable) j["elapsed_ms"] = rep.elapsed_ms;
  j["nodes"] = rep.nodes;
  return j;
}

Json report_json(const ScanResult& rep, bool stable) {
  Json j;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["k"] = rep.k;
  j["strategy"] = rep.strategy;
  j["full_count"] = to_decimal(rep.full_count);
  j["max_subset"] = subset_json(rep.max_subset);
  j["max_count"] = to_decimal(rep.max_count);
  j["violations"] = violations_json(rep.violations);
  j["partial"] = rep.partial;
  j["subsets_scanned"] = rep.subsets_scanned;
  if (!stable) j["elapsed_ms"] = rep.elapsed_ms;
  j["rows"] = rows_json(rep.rows);
  return j;
}

Json report_json(const AwResult& rep, bool stable) {
  Json j;
  j["ground"] = rep.ground;
  j["k"] = rep.k;
  j["aw"] = rep.aw;
  j["witness"] = rep.witness.literal();
  j["witness_colors_used"] = rep.witness.colors_used();
  j["merge_check_passed"] = rep.merge_check_passed;
  Json counts = Json::array();
  for (size_t t = 1; t < rep.exact_counts.size(); ++t)
    counts.push_back(to_decimal(rep.exact_counts[t]));
  j["exact_counts"] = std::move(counts);
  if (!stable) j["elapsed_ms"] = rep.elapsed_ms;
  j["nodes"] = rep.nodes;
  return j;
}

Json report_json(const CyclicCompareReport& rep, bool stable) {
  Json j;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["k"] = rep.k;
  j["g_interval"] = to_decimal(rep.g_interval);
  j["g_cyclic"] = to_decimal(rep.g_cyclic);
  j["cyclic_le_interval"] = rep.g_cyclic <= rep.g_interval;
  j["cyclic_ratio"] = rat_string(rep.cyclic_ratio);
  j["cyclic_ratio_decimal"] = rat_to_double(rep.cyclic_ratio);
  j["target"] = to_decimal(rep.target);
  if (!stable) j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

Json report_json(const SidonReport& rep, bool stable) {
  Json j;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["pattern"] = LinearPattern::sidon().descriptor();
  j["g_full"] = to_decimal(rep.g_full);
  j["few_color_fraction"] = rat_string(rep.few_color_fraction);
  j["few_color_fraction_decimal"] = rat_to_double(rep.few_color_fraction);
  j["strategy"] = rep.strategy;
  j["full_is_max"] = rep.full_is_max;
  j["max_subset"] = subset_json(rep.max_subset);
  j["max_count"] = to_decimal(rep.max_count);
  j["violations"] = violations_json(rep.violations);
  j["partial"] = rep.partial;
  if (!stable) j["elapsed_ms"] = rep.elapsed_ms;
  j["rows"] = rows_json(rep.rows);
  return j;
}

Json report_json(const TemplateStatistic& rep) {
  Json j;
  j["order"] = rep.order;
  j["r"] = rep.r;
  j["k"] = rep.k;
  j["rainbow_subtemplates"] = to_decimal(rep.rainbow_subtemplates);
  j["bound"] = rep.bound;
  j["satisfies"] = rep.satisfies;
  return j;
}

}  // namespace rainbowap
