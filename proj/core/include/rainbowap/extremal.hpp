#pragma once

#include "rainbowap/bignat.hpp"
#include "rainbowap/counting.hpp"
#include "rainbowap/ground.hpp"
#include "rainbowap/templates.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rainbowap {

enum class ScanStrategy { AllSubsets, Deletions, Random };
const char* strategy_name(ScanStrategy s);
ScanStrategy parse_strategy(const std::string& name);

struct ScanOptions {
  int samples = 100;          // random strategy: number of draws
  double density = 0.5;       // random strategy: per-element inclusion probability
  std::uint64_t seed = 1;
};

struct SubsetCount {
  std::vector<long long> subset;
  BigNat count;
  bool is_max = false;     // attains the maximum among scanned proper subsets
  bool violation = false;  // count >= the full-interval count
};

// Rainbow-free counts over proper subsets of [n], compared with the count of
// [n] itself. Subsets with count >= full_count are findings, not errors: the
// full interval is only guaranteed to dominate for large n.
struct ScanResult {
  long long n = 0;
  int r = 0;
  int k = 0;
  std::string strategy;
  BigNat full_count;
  std::vector<SubsetCount> rows;  // deterministic order (ascending subset mask)
  std::vector<long long> max_subset;
  BigNat max_count;
  std::vector<std::vector<long long>> violations;
  bool partial = false;  // budget ran out; rows hold what was finished
  std::uint64_t subsets_scanned = 0;
  double elapsed_ms = 0.0;
};

// all_subsets enumerates every nonempty proper subset and is limited to
// n <= 14; deletions scans the n one-element deletions; random samples
// subsets at the configured density.
ScanResult scan_subsets(long long n, int r, int k, ScanStrategy strategy,
                        const ScanOptions& scan = {}, const ExecOptions& opts = {});

// The least r such that no exact r-coloring of the ground set avoids a
// rainbow k-AP, computed as 1 + max{t : e_t > 0} from the exact-t counts.
// Merging two color classes can never create a rainbow AP, so the feasible
// t form a prefix; the merge check re-verifies that on the witnesses found.
struct AwResult {
  std::string ground;
  int k = 0;
  int aw = 0;
  Coloring witness;  // exact (aw-1)-coloring with no rainbow k-AP
  bool merge_check_passed = false;
  std::vector<BigNat> exact_counts;  // e_t for t = 1..|S|; index 0 unused
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};
// Throws std::domain_error when the ground set has no k-AP (aw undefined).
AwResult anti_vdw(const GroundSet& s, int k, const ExecOptions& opts = {});

// Rainbow-free counts of [n] and of Z_n side by side. Wrap-around APs only
// add constraints, so the cyclic count never exceeds the interval count.
struct CyclicCompareReport {
  long long n = 0;
  int r = 0;
  int k = 0;
  BigNat g_interval;
  BigNat g_cyclic;
  BigRat cyclic_ratio;  // g_cyclic / (k-1)^n
  BigNat target;        // C(r, k-1)
  double elapsed_ms = 0.0;
};
CyclicCompareReport cyclic_compare(long long n, int r, int k, const ExecOptions& opts = {});

// Counts colorings free of rainbow solutions of x1 - x2 + x3 - x4 = 0 on [n]
// and on scanned proper subsets, and reports which share of them uses at
// most 3 colors. Evidence is reported, never asserted.
struct SidonReport {
  long long n = 0;
  int r = 0;
  BigNat g_full;
  BigRat few_color_fraction;  // (colorings with <= 3 colors) / g_full
  std::string strategy;
  std::vector<SubsetCount> rows;
  std::vector<long long> max_subset;
  BigNat max_count;
  bool full_is_max = true;
  std::vector<std::vector<long long>> violations;
  bool partial = false;
  double elapsed_ms = 0.0;
};
SidonReport sidon_experiment(long long n, int r, ScanStrategy strategy,
                             const ScanOptions& scan = {}, const ExecOptions& opts = {});

}  // namespace rainbowap
