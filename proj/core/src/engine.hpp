#pragma once

// Internal search engines behind the public counters. A ConstraintSystem is
// the ground set reduced to positions 0..m-1 plus the element sets that must
// not become rainbow; k-AP counting and pattern counting both compile down
// to it.

#include "rainbowap/bignat.hpp"
#include "rainbowap/counting.hpp"
#include "rainbowap/pattern.hpp"

#include <cstdint>
#include <vector>

namespace rainbowap::detail {

struct ConstraintSystem {
  int positions = 0;
  std::vector<std::vector<int>> sets;  // ascending member positions, each size >= 2
};

ConstraintSystem ap_system(const GroundSet& s, int k);
ConstraintSystem pattern_system(const GroundSet& s, const LinearPattern& m);

struct EngineResult {
  BigNat count;
  std::uint64_t nodes = 0;
};

// Enumerates every r^m coloring and tests each against all constraint sets.
// Deliberately dumb: this is the oracle the other engines are checked
// against. Throws BudgetExceeded when r^m exceeds the configured ceiling.
EngineResult engine_bruteforce(const ConstraintSystem& sys, int r, const ExecOptions& opts);

// Backtracking over positions in ascending order; constraint sets are
// indexed by their maximum position so each node does only the work of the
// sets completed there, and a branch dies the moment a set goes rainbow.
// Positions in no set are factored out as a power of r.
EngineResult engine_pruned(const ConstraintSystem& sys, int r, const ExecOptions& opts);

// Signed sum over families F of constraint sets of (colorings rainbow on all
// of F). Families factor over connected components, whose assignment counts
// are memoized. Feasible only for small set counts; guarded by
// budget.max_ie_constraints.
EngineResult engine_inclusion_exclusion(const ConstraintSystem& sys, int r,
                                        const ExecOptions& opts);

// Canonical-labeling backtracking: color labels are first used in increasing
// order, so each leaf stands for one color-set-partition class. counts[t]
// is the number of canonical rainbow-free colorings using exactly t colors;
// multiplying by t! gives the exact-t coloring count.
struct SymmetryOutcome {
  std::vector<BigNat> canonical_counts;        // index t, 1..t_max; [0] unused
  std::vector<std::vector<int>> witnesses;     // first canonical leaf per t, when requested
  std::uint64_t nodes = 0;
};
SymmetryOutcome engine_symmetry(const ConstraintSystem& sys, int t_max, const ExecOptions& opts,
                                bool want_witnesses);

}  // namespace rainbowap::detail
