#include "rainbowap/cache.hpp"

#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

namespace rainbowap {

namespace {

Json strip_volatile(Json j) {
  j.erase("elapsed_ms");
  j.erase("nodes");
  j.erase("created_at");
  return j;
}

std::optional<CacheRecord> parse_line(const std::string& line, size_t lineno,
                                      const std::string& path) {
  Json j = Json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("key") || !j.contains("report")) {
    std::cerr << "warning: skipping corrupt cache line " << lineno << " in " << path << "\n";
    return std::nullopt;
  }
  CacheRecord rec;
  rec.key = j.at("key").get<std::string>();
  rec.role = j.value("role", std::string{});
  rec.report = j.at("report");
  rec.created_at = j.value("created_at", std::string{});
  return rec;
}

}  // namespace

bool report_values_equal(const Json& a, const Json& b) {
  return strip_volatile(a) == strip_volatile(b);
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {}

std::optional<CacheRecord> ResultCache::lookup(const std::string& key) const {
  std::ifstream in(path_);
  if (!in) return std::nullopt;  // absent cache is a cold cache
  std::optional<CacheRecord> found;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto rec = parse_line(line, lineno, path_);
    if (!rec || rec->key != key) continue;
    if (!found) {
      found = std::move(rec);
    } else if (!report_values_equal(found->report, rec->report)) {
      throw CacheConflict("cache holds two different values for key " + key + " in " + path_);
    }
  }
  return found;
}

void ResultCache::append(const CacheRecord& rec) const {
  auto existing = lookup(rec.key);
  if (existing) {
    if (!report_values_equal(existing->report, rec.report))
      throw CacheConflict("refusing to append a conflicting value for key " + rec.key + " to " +
                          path_);
    return;  // identical value already recorded
  }
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache for writing: " + path_);
  Json j;
  j["key"] = rec.key;
  j["role"] = rec.role;
  if (!rec.created_at.empty()) j["created_at"] = rec.created_at;
  j["report"] = rec.report;
  out << j.dump() << "\n";
}

std::string cache_key(const std::string& canonical) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) out << ((h >> shift) & 0xF);
  return out.str();
}

std::string timestamp_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace rainbowap
