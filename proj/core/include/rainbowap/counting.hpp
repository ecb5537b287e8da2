#pragma once

#include "rainbowap/bignat.hpp"
#include "rainbowap/ground.hpp"
#include "rainbowap/pattern.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbowap {

// Resource contract for the exponential counters. Zero means unlimited for
// max_nodes / max_seconds; exceeding any limit raises BudgetExceeded rather
// than returning a partial count.
struct Budget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;
  std::uint64_t bruteforce_ceiling = 1'000'000'000;  // max colorings the oracle will enumerate
  int max_ie_constraints = 20;                       // inclusion-exclusion family limit
};

struct ExecOptions {
  int workers = 1;
  Budget budget{};
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what, std::uint64_t nodes_at_abort)
      : std::runtime_error(std::move(what)), nodes(nodes_at_abort) {}
  std::uint64_t nodes = 0;
};

enum class CountMethod { Auto, BruteForce, Pruned, Symmetry, InclusionExclusion };
const char* method_name(CountMethod m);
CountMethod parse_method(const std::string& name);

// One exact count with its parameters, method tag and cost, suitable for
// caching and cross-checks. Counts serialize as decimal strings.
struct CountReport {
  std::string ground;
  int r = 0;
  std::string k_or_pattern;
  std::string method;
  BigNat count;
  double elapsed_ms = 0.0;
  std::uint64_t nodes = 0;
};

// Number of exact t-colorings (surjections onto [t]) of a set of the given
// size, by the alternating binomial sum. Zero when set_size < t.
BigNat surjection_count(int t, long long set_size);

// Number of r-colorings of a set of the given size that use at most k-1
// distinct colors, evaluated as the double sum
//   sum_{t=1}^{k-1} t^s * sum_{j=t}^{k-1} C(r,j) C(j,j-t) (-1)^(j-t).
// This is the general lower bound for the rainbow-free count. Throws on
// r < k.
BigNat few_color_count(int r, int k, long long set_size);

// The same quantity as sum_{j=1}^{k-1} C(r,j) * surjection_count(j, s); kept
// as a second algebraic route for cross-checking.
BigNat few_color_count_via_surjections(int r, int k, long long set_size);

// The number of r-colorings of s with no rainbow k-AP, by four independent
// routes. All methods return exactly equal counts; bruteforce and
// inclusion_exclusion are deliberately simple oracles with hard feasibility
// limits, pruned and symmetry are the working counters.
CountReport count_bruteforce(const GroundSet& s, int r, int k, const ExecOptions& opts = {});
CountReport count_pruned(const GroundSet& s, int r, int k, const ExecOptions& opts = {});
CountReport count_symmetry(const GroundSet& s, int r, int k, const ExecOptions& opts = {});
CountReport count_inclusion_exclusion(const GroundSet& s, int r, int k,
                                      const ExecOptions& opts = {});
CountReport count_rainbow_free(const GroundSet& s, int r, int k, CountMethod method,
                               const ExecOptions& opts = {});

// Number of r-colorings of s in which no distinct-valued solution set of the
// pattern is rainbow. Non-cyclic grounds only.
CountReport count_pattern_free(const GroundSet& s, int r, const LinearPattern& m,
                               const ExecOptions& opts = {});

// e_t for t = 1..t_max: rainbow-k-AP-free colorings of s that use exactly
// the colors {1..t}, each at least once. Computed by canonical-labeling
// backtracking (colors first used in increasing order), so one search pass
// yields the whole vector. Index 0 is unused.
struct ExactColorCounts {
  std::vector<BigNat> counts;                    // counts[t], t = 1..t_max
  std::vector<std::vector<int>> witness_colors;  // first canonical witness per t, may be empty
  std::uint64_t nodes = 0;
};
ExactColorCounts exact_color_counts_detailed(const GroundSet& s, int k, int t_max,
                                             const ExecOptions& opts = {},
                                             bool want_witnesses = false);
std::vector<BigNat> exact_color_counts(const GroundSet& s, int k, int t_max,
                                       const ExecOptions& opts = {});

// The rainbow-free count of [n] next to its (k-1)^n scaling: the exact ratio
// g / (k-1)^n, the few-color lower-bound ratio, and the limiting value
// C(r, k-1). error_term is the asymptotic correction factor
// (k-1)^(-(1 - log(k-2)/log(k-1)) n / (8 k^3 log n)); it is reported for
// context and never asserted at small n.
struct RatioReport {
  long long n = 0;
  int r = 0;
  int k = 0;
  BigNat count;
  BigRat ratio;
  BigRat lower;
  BigNat target;
  double error_term = 0.0;
  double elapsed_ms = 0.0;
  std::string method;
  std::uint64_t nodes = 0;
};
RatioReport ratio_report(long long n, int r, int k, const ExecOptions& opts = {});

}  // namespace rainbowap
