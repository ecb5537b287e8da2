#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rainbowap {

enum class GroundKind { Interval, Subset, Cyclic };

// The colored domain. Three kinds share one membership/iteration contract:
//   Interval  [n]  = {1, ..., n}
//   Subset    S    = an ascending subset of [n]
//   Cyclic    Z_n  = residues {0, ..., n-1}
// Elements are plain integers: 1-based for Interval/Subset, 0-based residues
// for Cyclic. Iteration order is ascending element value everywhere; every
// counter and canonicalization relies on that single order. Immutable after
// construction, safe to share across worker threads.
class GroundSet {
 public:
  static GroundSet interval(long long n);
  static GroundSet subset(long long n, std::vector<long long> elements);
  static GroundSet cyclic(long long n);

  GroundKind kind() const { return kind_; }
  long long ambient() const { return n_; }
  const std::vector<long long>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }

  // Membership; cyclic values are reduced mod n first.
  bool contains(long long x) const;
  // Index of x in ascending element order, or nullopt.
  std::optional<int> position_of(long long x) const;

  // Canonical text form, e.g. "interval:5", "subset:6:2,4", "cyclic:4".
  std::string descriptor() const;

  bool operator==(const GroundSet&) const = default;

 private:
  GroundSet(GroundKind kind, long long n, std::vector<long long> elements);

  GroundKind kind_;
  long long n_;
  std::vector<long long> elements_;
};

// Factory matching the three kinds; Subset input is deduplicated and sorted.
// Throws std::invalid_argument on n < 1, an empty subset, or out-of-range
// elements.
GroundSet make_ground(GroundKind kind, long long n, std::vector<long long> elements = {});

// Subset literal: comma-separated integers ("1,2,5,9") or "@file" naming a
// text file with one integer per line. ambient = 0 means "max element".
GroundSet parse_subset_literal(const std::string& literal, long long ambient = 0);

}  // namespace rainbowap
