#include "engine.hpp"

#include "rainbowap/progression.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace rainbowap::detail {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kShardDepth = 3;          // work split: fixed prefix of the search
constexpr std::uint64_t kCheckEvery = 8192;  // budget poll interval in nodes

// Shared node/time accounting. Workers charge node batches; the first limit
// hit flips the abort flag and everyone unwinds, after which the caller
// throws BudgetExceeded.
class BudgetTracker {
 public:
  explicit BudgetTracker(const Budget& b)
      : max_nodes_(b.max_nodes), max_seconds_(b.max_seconds), start_(Clock::now()) {}

  bool charge(std::uint64_t delta) {
    const std::uint64_t total = nodes_.fetch_add(delta, std::memory_order_relaxed) + delta;
    if (abort_.load(std::memory_order_relaxed)) return false;
    if (max_nodes_ > 0 && total > max_nodes_) {
      fail("node budget exceeded");
      return false;
    }
    if (max_seconds_ > 0 && seconds() > max_seconds_) {
      fail("time budget exceeded");
      return false;
    }
    return true;
  }

  bool aborted() const { return abort_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

  void rethrow_if_aborted() const {
    if (!aborted()) return;
    std::lock_guard<std::mutex> lock(mu_);
    throw BudgetExceeded(reason_, nodes());
  }

 private:
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

  void fail(const char* why) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (reason_.empty()) reason_ = why;
    }
    abort_.store(true, std::memory_order_relaxed);
  }

  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> abort_{false};
  mutable std::mutex mu_;
  std::string reason_;
  std::uint64_t max_nodes_;
  double max_seconds_;
  Clock::time_point start_;
};

// Runs fn(i) for i in [0, count). Shards are fixed ahead of time, so totals
// are identical however they are scheduled across threads.
template <typename Fn>
void run_sharded(int workers, std::size_t count, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  const int nthreads = static_cast<int>(std::min<std::size_t>(workers, count));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) break;
        fn(i);
      }
    });
  for (auto& th : pool) th.join();
}

int min_set_size(const ConstraintSystem& sys) {
  int best = 1 << 30;
  for (const auto& set : sys.sets) best = std::min(best, static_cast<int>(set.size()));
  return best;
}

void validate_colors(int r) {
  if (r < 1 || r > 64) throw std::invalid_argument("search engines need 1 <= r <= 64");
}

// True when the fully colored set has pairwise-distinct colors.
inline bool set_is_rainbow(const std::vector<int>& members, const std::vector<std::uint8_t>& color) {
  std::uint64_t mask = 0;
  for (int q : members) {
    const std::uint64_t bit = 1ULL << (color[static_cast<size_t>(q)] - 1);
    if (mask & bit) return false;
    mask |= bit;
  }
  return true;
}

BigNat from_u128(unsigned __int128 v) {
  BigNat hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) | BigNat(static_cast<std::uint64_t>(v));
}

}  // namespace

ConstraintSystem ap_system(const GroundSet& s, int k) {
  ConstraintSystem sys;
  sys.positions = s.size();
  for_each_k_ap(s, k, [&](const Progression& p) {
    std::vector<int> members;
    members.reserve(p.members.size());
    for (long long x : p.members) members.push_back(*s.position_of(x));
    sys.sets.push_back(std::move(members));
    return true;
  });
  return sys;
}

ConstraintSystem pattern_system(const GroundSet& s, const LinearPattern& m) {
  ConstraintSystem sys;
  sys.positions = s.size();
  for (const auto& set : pattern_constraint_sets(m, s)) {
    std::vector<int> members;
    members.reserve(set.size());
    for (long long x : set) members.push_back(*s.position_of(x));
    sys.sets.push_back(std::move(members));
  }
  return sys;
}

// ---------------------------------------------------------------------------
// brute force

namespace {

struct BruteShardResult {
  std::uint64_t accepted = 0;
};

void brute_run_shard(const ConstraintSystem& sys, int r, int prefix_len,
                     std::uint64_t prefix_id, BudgetTracker& budget, BruteShardResult& out) {
  const int m = sys.positions;
  std::vector<std::uint8_t> color(static_cast<size_t>(m), 1);
  std::uint64_t id = prefix_id;
  for (int p = prefix_len - 1; p >= 0; --p) {
    color[static_cast<size_t>(p)] = static_cast<std::uint8_t>(1 + id % static_cast<std::uint64_t>(r));
    id /= static_cast<std::uint64_t>(r);
  }
  std::uint64_t local_nodes = 0;
  std::uint64_t accepted = 0;
  while (true) {
    bool free_of_rainbow = true;
    for (const auto& set : sys.sets)
      if (set_is_rainbow(set, color)) {
        free_of_rainbow = false;
        break;
      }
    if (free_of_rainbow) ++accepted;
    if (++local_nodes >= kCheckEvery) {
      if (!budget.charge(local_nodes)) return;
      local_nodes = 0;
    }
    // odometer over the suffix positions
    int p = m - 1;
    while (p >= prefix_len && color[static_cast<size_t>(p)] == r) {
      color[static_cast<size_t>(p)] = 1;
      --p;
    }
    if (p < prefix_len) break;
    ++color[static_cast<size_t>(p)];
  }
  budget.charge(local_nodes);
  out.accepted = accepted;
}

}  // namespace

EngineResult engine_bruteforce(const ConstraintSystem& sys, int r, const ExecOptions& opts) {
  validate_colors(r);
  const int m = sys.positions;
  const BigNat total_colorings = nat_pow(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(m));
  if (opts.budget.bruteforce_ceiling > 0 && total_colorings > opts.budget.bruteforce_ceiling)
    throw BudgetExceeded("brute force would enumerate " + to_decimal(total_colorings) +
                             " colorings, above the configured ceiling",
                         0);

  const int prefix_len = std::min(kShardDepth, m);
  std::uint64_t shards = 1;
  for (int i = 0; i < prefix_len; ++i) shards *= static_cast<std::uint64_t>(r);

  BudgetTracker budget(opts.budget);
  std::vector<BruteShardResult> results(shards);
  run_sharded(opts.workers, shards, [&](std::size_t i) {
    if (budget.aborted()) return;
    brute_run_shard(sys, r, prefix_len, i, budget, results[i]);
  });
  budget.rethrow_if_aborted();

  BigNat count = 0;
  for (const auto& res : results) count += res.accepted;
  return {count, budget.nodes()};
}

// ---------------------------------------------------------------------------
// pruned backtracking

namespace {

// Search plan over the constrained positions only; unconstrained positions
// contribute a factor of r each.
struct PrunedPlan {
  int m = 0;
  int free_count = 0;
  std::vector<std::vector<std::vector<int>>> by_max;  // completed sets per position
};

PrunedPlan build_pruned_plan(const ConstraintSystem& sys) {
  std::vector<char> constrained(static_cast<size_t>(sys.positions), 0);
  for (const auto& set : sys.sets)
    for (int q : set) constrained[static_cast<size_t>(q)] = 1;
  std::vector<int> remap(static_cast<size_t>(sys.positions), -1);
  int m = 0;
  for (int p = 0; p < sys.positions; ++p)
    if (constrained[static_cast<size_t>(p)]) remap[static_cast<size_t>(p)] = m++;
  PrunedPlan plan;
  plan.m = m;
  plan.free_count = sys.positions - m;
  plan.by_max.resize(static_cast<size_t>(m));
  for (const auto& set : sys.sets) {
    std::vector<int> members;
    members.reserve(set.size());
    for (int q : set) members.push_back(remap[static_cast<size_t>(q)]);
    plan.by_max[static_cast<size_t>(members.back())].push_back(std::move(members));
  }
  return plan;
}

struct PrunedWorker {
  const PrunedPlan& plan;
  int r;
  BudgetTracker& budget;
  std::vector<std::uint8_t> color;
  std::uint64_t local_nodes = 0;
  std::uint64_t acc = 0;
  BigNat subtotal = 0;
  bool alive = true;

  PrunedWorker(const PrunedPlan& p, int colors, BudgetTracker& b)
      : plan(p), r(colors), budget(b), color(static_cast<size_t>(p.m), 1) {}

  bool color_ok(int p) const {
    for (const auto& members : plan.by_max[static_cast<size_t>(p)])
      if (set_is_rainbow(members, color)) return false;
    return true;
  }

  void tick(std::uint64_t n) {
    local_nodes += n;
    if (local_nodes >= kCheckEvery) {
      if (!budget.charge(local_nodes)) alive = false;
      local_nodes = 0;
    }
  }

  void add_leaves(std::uint64_t n) {
    acc += n;
    if (acc >= (1ULL << 62)) {
      subtotal += acc;
      acc = 0;
    }
  }

  void descend(int p) {
    if (!alive) return;
    if (p == plan.m - 1) {
      std::uint64_t valid = 0;
      for (int c = 1; c <= r; ++c) {
        color[static_cast<size_t>(p)] = static_cast<std::uint8_t>(c);
        if (color_ok(p)) ++valid;
      }
      tick(static_cast<std::uint64_t>(r));
      add_leaves(valid);
      return;
    }
    for (int c = 1; c <= r && alive; ++c) {
      color[static_cast<size_t>(p)] = static_cast<std::uint8_t>(c);
      tick(1);
      if (color_ok(p)) descend(p + 1);
    }
  }

  BigNat finish() {
    budget.charge(local_nodes);
    local_nodes = 0;
    subtotal += acc;
    acc = 0;
    return subtotal;
  }
};

// Enumerates the valid color prefixes of the first `depth` plan positions,
// in canonical order. These are the work shards.
std::vector<std::vector<std::uint8_t>> pruned_prefixes(const PrunedPlan& plan, int r, int depth,
                                                       BudgetTracker& budget) {
  std::vector<std::vector<std::uint8_t>> prefixes;
  PrunedWorker scout(plan, r, budget);
  auto walk = [&](auto&& self, int p) -> void {
    if (!scout.alive) return;
    if (p == depth) {
      prefixes.emplace_back(scout.color.begin(), scout.color.begin() + depth);
      return;
    }
    for (int c = 1; c <= r && scout.alive; ++c) {
      scout.color[static_cast<size_t>(p)] = static_cast<std::uint8_t>(c);
      scout.tick(1);
      if (scout.color_ok(p)) self(self, p + 1);
    }
  };
  walk(walk, 0);
  budget.charge(scout.local_nodes);
  return prefixes;
}

}  // namespace

EngineResult engine_pruned(const ConstraintSystem& sys, int r, const ExecOptions& opts) {
  validate_colors(r);
  if (sys.sets.empty() || r < min_set_size(sys))
    return {nat_pow(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(sys.positions)), 0};

  const PrunedPlan plan = build_pruned_plan(sys);
  BudgetTracker budget(opts.budget);
  const int depth = std::min(kShardDepth, plan.m);
  const auto prefixes = pruned_prefixes(plan, r, depth, budget);
  budget.rethrow_if_aborted();

  BigNat total = 0;
  if (depth == plan.m) {
    total = prefixes.size();  // prefixes are complete valid colorings
  } else {
    std::vector<BigNat> subtotals(prefixes.size());
    run_sharded(opts.workers, prefixes.size(), [&](std::size_t i) {
      if (budget.aborted()) return;
      PrunedWorker worker(plan, r, budget);
      std::copy(prefixes[i].begin(), prefixes[i].end(), worker.color.begin());
      worker.descend(depth);
      subtotals[i] = worker.finish();
    });
    budget.rethrow_if_aborted();
    for (const auto& sub : subtotals) total += sub;
  }
  total *= nat_pow(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(plan.free_count));
  return {total, budget.nodes()};
}

// ---------------------------------------------------------------------------
// canonical-labeling backtracking

namespace {

struct SymmetryPlan {
  int m = 0;
  std::vector<std::vector<std::vector<int>>> by_max;
};

SymmetryPlan build_symmetry_plan(const ConstraintSystem& sys) {
  SymmetryPlan plan;
  plan.m = sys.positions;
  plan.by_max.resize(static_cast<size_t>(plan.m));
  for (const auto& set : sys.sets)
    plan.by_max[static_cast<size_t>(set.back())].push_back(set);
  return plan;
}

struct SymmetryWorker {
  const SymmetryPlan& plan;
  int t_max;
  bool want_witnesses;
  BudgetTracker& budget;
  std::vector<std::uint8_t> color;
  std::vector<std::uint64_t> acc;
  std::vector<BigNat> counts;
  std::vector<std::vector<int>> witnesses;
  std::uint64_t local_nodes = 0;
  bool alive = true;

  SymmetryWorker(const SymmetryPlan& p, int tmax, bool witness, BudgetTracker& b)
      : plan(p),
        t_max(tmax),
        want_witnesses(witness),
        budget(b),
        color(static_cast<size_t>(p.m), 1),
        acc(static_cast<size_t>(tmax) + 1, 0),
        counts(static_cast<size_t>(tmax) + 1, 0),
        witnesses(static_cast<size_t>(tmax) + 1) {}

  bool color_ok(int p) const {
    for (const auto& members : plan.by_max[static_cast<size_t>(p)])
      if (set_is_rainbow(members, color)) return false;
    return true;
  }

  void tick(std::uint64_t n) {
    local_nodes += n;
    if (local_nodes >= kCheckEvery) {
      if (!budget.charge(local_nodes)) alive = false;
      local_nodes = 0;
    }
  }

  void leaf(int t) {
    if (want_witnesses && witnesses[static_cast<size_t>(t)].empty())
      witnesses[static_cast<size_t>(t)].assign(color.begin(), color.end());
    if (++acc[static_cast<size_t>(t)] >= (1ULL << 62)) {
      counts[static_cast<size_t>(t)] += acc[static_cast<size_t>(t)];
      acc[static_cast<size_t>(t)] = 0;
    }
  }

  void descend(int p, int used) {
    if (!alive) return;
    const int limit = std::min(used + 1, t_max);
    if (p == plan.m - 1) {
      for (int c = 1; c <= limit; ++c) {
        color[static_cast<size_t>(p)] = static_cast<std::uint8_t>(c);
        if (color_ok(p)) leaf(std::max(used, c));
      }
      tick(static_cast<std::uint64_t>(limit));
      return;
    }
    for (int c = 1; c <= limit && alive; ++c) {
      color[static_cast<size_t>(p)] = static_cast<std::uint8_t>(c);
      tick(1);
      if (color_ok(p)) descend(p + 1, std::max(used, c));
    }
  }

  void finish() {
    budget.charge(local_nodes);
    local_nodes = 0;
    for (size_t t = 0; t < acc.size(); ++t) {
      counts[t] += acc[t];
      acc[t] = 0;
    }
  }
};

struct SymmetryPrefix {
  std::vector<std::uint8_t> colors;
  int used = 0;
};

std::vector<SymmetryPrefix> symmetry_prefixes(const SymmetryPlan& plan, int t_max, int depth,
                                              BudgetTracker& budget) {
  std::vector<SymmetryPrefix> prefixes;
  SymmetryWorker scout(plan, t_max, false, budget);
  auto walk = [&](auto&& self, int p, int used) -> void {
    if (!scout.alive) return;
    if (p == depth) {
      prefixes.push_back({{scout.color.begin(), scout.color.begin() + depth}, used});
      return;
    }
    const int limit = std::min(used + 1, t_max);
    for (int c = 1; c <= limit && scout.alive; ++c) {
      scout.color[static_cast<size_t>(p)] = static_cast<std::uint8_t>(c);
      scout.tick(1);
      if (scout.color_ok(p)) self(self, p + 1, std::max(used, c));
    }
  };
  walk(walk, 0, 0);
  budget.charge(scout.local_nodes);
  return prefixes;
}

}  // namespace

SymmetryOutcome engine_symmetry(const ConstraintSystem& sys, int t_max, const ExecOptions& opts,
                                bool want_witnesses) {
  if (t_max < 1 || t_max > 64) throw std::invalid_argument("canonical search needs 1 <= t_max <= 64");
  const SymmetryPlan plan = build_symmetry_plan(sys);
  BudgetTracker budget(opts.budget);

  SymmetryOutcome outcome;
  outcome.canonical_counts.assign(static_cast<size_t>(t_max) + 1, 0);
  outcome.witnesses.assign(static_cast<size_t>(t_max) + 1, {});

  const int depth = std::min(kShardDepth, plan.m);
  auto prefixes = symmetry_prefixes(plan, t_max, depth, budget);
  budget.rethrow_if_aborted();

  if (depth == plan.m) {
    for (const auto& prefix : prefixes) {
      outcome.canonical_counts[static_cast<size_t>(prefix.used)] += 1;
      auto& w = outcome.witnesses[static_cast<size_t>(prefix.used)];
      if (want_witnesses && w.empty()) w.assign(prefix.colors.begin(), prefix.colors.end());
    }
    outcome.nodes = budget.nodes();
    return outcome;
  }

  std::vector<SymmetryWorker> workers;
  workers.reserve(prefixes.size());
  for (size_t i = 0; i < prefixes.size(); ++i)
    workers.emplace_back(plan, t_max, want_witnesses, budget);
  run_sharded(opts.workers, prefixes.size(), [&](std::size_t i) {
    if (budget.aborted()) return;
    auto& worker = workers[i];
    std::copy(prefixes[i].colors.begin(), prefixes[i].colors.end(), worker.color.begin());
    worker.descend(depth, prefixes[i].used);
    worker.finish();
  });
  budget.rethrow_if_aborted();

  // shards are merged in canonical prefix order, so "first witness" is the
  // globally first canonical leaf
  for (int t = 1; t <= t_max; ++t) {
    for (auto& worker : workers) {
      outcome.canonical_counts[static_cast<size_t>(t)] += worker.counts[static_cast<size_t>(t)];
      auto& w = outcome.witnesses[static_cast<size_t>(t)];
      if (want_witnesses && w.empty() && !worker.witnesses[static_cast<size_t>(t)].empty())
        w = worker.witnesses[static_cast<size_t>(t)];
    }
  }
  outcome.nodes = budget.nodes();
  return outcome;
}

// ---------------------------------------------------------------------------
// inclusion-exclusion

namespace {

struct IeContext {
  const ConstraintSystem& sys;
  int r;
  std::vector<std::uint64_t> elem_mask;  // per constraint: positions as bits
  std::vector<std::uint32_t> adjacency;  // per constraint: overlapping constraints (incl. self)
  std::vector<std::vector<int>> containing;  // per position: constraint ids
};

IeContext build_ie_context(const ConstraintSystem& sys, int r) {
  IeContext ctx{sys, r, {}, {}, {}};
  const size_t g = sys.sets.size();
  ctx.elem_mask.assign(g, 0);
  ctx.containing.assign(static_cast<size_t>(sys.positions), {});
  for (size_t i = 0; i < g; ++i)
    for (int q : sys.sets[i]) {
      ctx.elem_mask[i] |= 1ULL << q;
      ctx.containing[static_cast<size_t>(q)].push_back(static_cast<int>(i));
    }
  ctx.adjacency.assign(g, 0);
  for (size_t i = 0; i < g; ++i)
    for (size_t j = 0; j < g; ++j)
      if (ctx.elem_mask[i] & ctx.elem_mask[j]) ctx.adjacency[i] |= 1U << j;
  return ctx;
}

std::uint32_t component_closure(std::uint32_t family, std::uint32_t seed,
                                const std::vector<std::uint32_t>& adjacency) {
  std::uint32_t comp = seed, frontier = seed;
  while (frontier) {
    std::uint32_t next = 0;
    std::uint32_t f = frontier;
    while (f) {
      const int i = std::countr_zero(f);
      f &= f - 1;
      next |= adjacency[static_cast<size_t>(i)];
    }
    next &= family & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

// Number of colorings of the component's union in which every constraint of
// the component is rainbow, i.e. every constraint's members get pairwise
// distinct colors. The DFS walks only allowed colors (bitmask of colors not
// yet used by any constraint containing the position) and bulk-counts the
// last position. Positions are ordered so partially-assigned constraints
// finish early, which keeps the frontier narrow.
unsigned __int128 component_assignments(const IeContext& ctx, std::uint32_t comp,
                                        std::vector<std::uint64_t>& used, BudgetTracker& budget,
                                        std::uint64_t& local_nodes, bool& alive) {
  std::uint64_t union_mask = 0;
  std::uint32_t f = comp;
  while (f) {
    const int i = std::countr_zero(f);
    f &= f - 1;
    union_mask |= ctx.elem_mask[static_cast<size_t>(i)];
  }
  std::vector<int> remaining;
  std::uint64_t u = union_mask;
  while (u) {
    remaining.push_back(std::countr_zero(u));
    u &= u - 1;
  }

  // greedy order: prefer positions lying on constraints that already started
  std::vector<int> assigned_members(ctx.sys.sets.size(), 0);
  std::vector<int> pos_order;
  pos_order.reserve(remaining.size());
  while (!remaining.empty()) {
    size_t best = 0;
    int best_active = -1, best_total = -1;
    for (size_t i = 0; i < remaining.size(); ++i) {
      int active = 0, total = 0;
      for (int ci : ctx.containing[static_cast<size_t>(remaining[i])]) {
        if (!(comp & (1U << ci))) continue;
        ++total;
        if (assigned_members[static_cast<size_t>(ci)] > 0) ++active;
      }
      if (active > best_active || (active == best_active && total > best_total)) {
        best = i;
        best_active = active;
        best_total = total;
      }
    }
    const int p = remaining[best];
    remaining.erase(remaining.begin() + static_cast<long>(best));
    pos_order.push_back(p);
    for (int ci : ctx.containing[static_cast<size_t>(p)])
      if (comp & (1U << ci)) ++assigned_members[static_cast<size_t>(ci)];
  }

  std::vector<std::vector<int>> at_depth(pos_order.size());
  for (size_t d = 0; d < pos_order.size(); ++d)
    for (int ci : ctx.containing[static_cast<size_t>(pos_order[d])])
      if (comp & (1U << ci)) at_depth[d].push_back(ci);

  const std::uint64_t full = ctx.r == 64 ? ~0ULL : (1ULL << ctx.r) - 1;
  const size_t last = pos_order.size() - 1;
  unsigned __int128 leaves = 0;
  auto dfs = [&](auto&& self, size_t depth) -> void {
    if (!alive) return;
    std::uint64_t forbidden = 0;
    for (int ci : at_depth[depth]) forbidden |= used[static_cast<size_t>(ci)];
    std::uint64_t allowed = full & ~forbidden;
    if (++local_nodes >= kCheckEvery) {
      if (!budget.charge(local_nodes)) alive = false;
      local_nodes = 0;
      if (!alive) return;
    }
    if (depth == last) {
      leaves += static_cast<unsigned>(std::popcount(allowed));
      return;
    }
    while (allowed) {
      const std::uint64_t bit = allowed & (~allowed + 1);
      allowed &= ~bit;
      for (int ci : at_depth[depth]) used[static_cast<size_t>(ci)] |= bit;
      self(self, depth + 1);
      for (int ci : at_depth[depth]) used[static_cast<size_t>(ci)] &= ~bit;
    }
  };
  dfs(dfs, 0);
  return leaves;
}

}  // namespace

EngineResult engine_inclusion_exclusion(const ConstraintSystem& sys, int r,
                                        const ExecOptions& opts) {
  validate_colors(r);
  const int g = static_cast<int>(sys.sets.size());
  if (sys.positions > 64)
    throw std::invalid_argument("inclusion-exclusion supports at most 64 positions");
  const int limit = std::min(opts.budget.max_ie_constraints, 30);
  if (g > limit)
    throw BudgetExceeded("too many constraint sets for inclusion-exclusion: " +
                             std::to_string(g) + " > " + std::to_string(limit),
                         0);
  if (sys.sets.empty())
    return {nat_pow(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(sys.positions)), 0};
  if (sys.positions * std::log2(static_cast<double>(r)) > 126.0)
    throw BudgetExceeded("inclusion-exclusion term r^|S| does not fit fixed-width arithmetic", 0);

  const IeContext ctx = build_ie_context(sys, r);
  BudgetTracker budget(opts.budget);

  const std::uint64_t families = 1ULL << g;
  const int nthreads = std::max(1, std::min<int>(opts.workers, 64));
  const std::uint64_t chunk = (families + static_cast<std::uint64_t>(nthreads) - 1) /
                              static_cast<std::uint64_t>(nthreads);
  std::vector<BigInt> partial(static_cast<size_t>(nthreads), 0);

  auto run_chunk = [&](int tid) {
    const std::uint64_t lo = static_cast<std::uint64_t>(tid) * chunk;
    const std::uint64_t hi = std::min(families, lo + chunk);
    std::unordered_map<std::uint32_t, unsigned __int128> memo;
    std::vector<std::uint64_t> used(static_cast<size_t>(g), 0);
    std::uint64_t local_nodes = 0;
    bool alive = true;
    BigInt acc = 0;
    for (std::uint64_t family = lo; family < hi && alive; ++family) {
      if (budget.aborted()) break;
      unsigned __int128 product = 1;
      int union_size = 0;
      std::uint32_t rest = static_cast<std::uint32_t>(family);
      bool vanished = false;
      while (rest) {
        const std::uint32_t seed = rest & (~rest + 1);
        const std::uint32_t comp = component_closure(static_cast<std::uint32_t>(family), seed,
                                                     ctx.adjacency);
        rest &= ~comp;
        auto it = memo.find(comp);
        unsigned __int128 leaves;
        if (it != memo.end()) {
          leaves = it->second;
        } else {
          leaves = component_assignments(ctx, comp, used, budget, local_nodes, alive);
          if (!alive) break;
          memo.emplace(comp, leaves);
        }
        if (leaves == 0) {
          vanished = true;
          break;
        }
        product *= leaves;
        std::uint64_t union_mask = 0;
        std::uint32_t f = comp;
        while (f) {
          const int i = std::countr_zero(f);
          f &= f - 1;
          union_mask |= ctx.elem_mask[static_cast<size_t>(i)];
        }
        union_size += std::popcount(union_mask);
      }
      if (!alive || vanished) continue;
      for (int e = 0; e < sys.positions - union_size; ++e)
        product *= static_cast<unsigned>(r);
      const BigNat term = from_u128(product);
      if (std::popcount(static_cast<std::uint64_t>(family)) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    budget.charge(local_nodes);
    partial[static_cast<size_t>(tid)] = std::move(acc);
  };

  if (nthreads == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(run_chunk, t);
    for (auto& th : pool) th.join();
  }
  budget.rethrow_if_aborted();

  BigInt total = 0;
  for (const auto& p : partial) total += p;
  if (total < 0) throw std::logic_error("inclusion-exclusion produced a negative count");
  return {BigNat(total), budget.nodes()};
}

}  // namespace rainbowap::detail
