#pragma once

#include "rainbowap/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace rainbowap {

// Thrown when the cache holds (or would hold) two different values for the
// same key. Conflicting exact counts mean a bug or a tampered file and are
// never silently accepted.
class CacheConflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CacheRecord {
  std::string key;
  std::string role;  // count | gamma | formula | ratio | scan | aw | cyclic | pattern | sidon | template-stat
  Json report;
  std::string created_at;  // ISO-8601 UTC; empty in stable mode
};

// Append-only line-delimited JSON. Human-inspectable, merge-friendly, and
// precision-safe (counts are decimal strings). Corrupt lines are skipped
// with a warning on stderr, never trusted.
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  const std::string& path() const { return path_; }

  // First record with the key, after conflict-checking every record that
  // shares it.
  std::optional<CacheRecord> lookup(const std::string& key) const;

  // No-op if an equal-valued record already exists; CacheConflict if a
  // different-valued one does.
  void append(const CacheRecord& rec) const;

 private:
  std::string path_;
};

// Stable 64-bit key of a canonical parameter string, as 16 hex digits.
std::string cache_key(const std::string& canonical);

// Two reports agree when they match after dropping wall-clock and
// search-cost fields.
bool report_values_equal(const Json& a, const Json& b);

std::string timestamp_utc_now();

}  // namespace rainbowap
