#include "rainbowap/extremal.hpp"

#include "engine.hpp"
#include "rainbowap/pattern.hpp"
#include "rainbowap/progression.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace rainbowap {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<long long> mask_to_elements(long long n, std::uint64_t mask) {
  std::vector<long long> elems;
  for (long long x = 1; x <= n; ++x)
    if (mask & (1ULL << (x - 1))) elems.push_back(x);
  return elems;
}

std::vector<std::uint64_t> build_subset_masks(long long n, ScanStrategy strategy,
                                              const ScanOptions& scan) {
  const std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;
  std::vector<std::uint64_t> masks;
  switch (strategy) {
    case ScanStrategy::AllSubsets: {
      if (n > 14)
        throw BudgetExceeded("all_subsets scan is limited to n <= 14 (2^n subset counts)", 0);
      for (std::uint64_t m = 1; m < full; ++m) masks.push_back(m);
      break;
    }
    case ScanStrategy::Deletions: {
      for (long long x = 1; x <= n; ++x)
        if (n > 1) masks.push_back(full & ~(1ULL << (x - 1)));
      break;
    }
    case ScanStrategy::Random: {
      if (n > 62) throw std::invalid_argument("random scan supports n <= 62");
      std::mt19937_64 rng(scan.seed);
      std::bernoulli_distribution include(scan.density);
      std::set<std::uint64_t> seen;
      const int attempts_cap = scan.samples * 64 + 1024;
      int attempts = 0;
      while (static_cast<int>(masks.size()) < scan.samples && attempts < attempts_cap) {
        ++attempts;
        std::uint64_t m = 0;
        for (long long x = 1; x <= n; ++x)
          if (include(rng)) m |= 1ULL << (x - 1);
        if (m == 0 || m == full) continue;  // proper nonempty subsets only
        if (seen.insert(m).second) masks.push_back(m);
      }
      std::sort(masks.begin(), masks.end());
      break;
    }
  }
  return masks;
}

// Parallel map over subset masks with a deterministic result order. Each
// subset gets its own count; a budget failure flags the scan partial and
// stops issuing new work.
struct SubsetScanOutcome {
  std::vector<SubsetCount> rows;
  bool partial = false;
  std::uint64_t scanned = 0;
};

template <typename CountFn>
SubsetScanOutcome scan_masks(long long n, const std::vector<std::uint64_t>& masks, int workers,
                             CountFn&& count_subset) {
  SubsetScanOutcome out;
  out.rows.resize(masks.size());
  std::vector<char> done(masks.size(), 0);
  std::atomic<bool> stop{false};
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= masks.size()) break;
      try {
        SubsetCount row;
        row.subset = mask_to_elements(n, masks[i]);
        row.count = count_subset(row.subset);
        out.rows[i] = std::move(row);
        done[i] = 1;
      } catch (const BudgetExceeded&) {
        stop.store(true, std::memory_order_relaxed);
      }
    }
  };

  const int nthreads = std::max(1, std::min<int>(workers, static_cast<int>(masks.size())));
  if (nthreads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  if (stop.load()) {
    out.partial = true;
    std::vector<SubsetCount> kept;
    for (std::size_t i = 0; i < masks.size(); ++i)
      if (done[i]) kept.push_back(std::move(out.rows[i]));
    out.rows = std::move(kept);
  }
  out.scanned = out.rows.size();
  return out;
}

void mark_extremes(std::vector<SubsetCount>& rows, const BigNat& full_count,
                   std::vector<long long>* max_subset, BigNat* max_count,
                   std::vector<std::vector<long long>>* violations) {
  max_subset->clear();
  *max_count = 0;
  violations->clear();
  for (const auto& row : rows)
    if (row.count > *max_count) *max_count = row.count;
  for (auto& row : rows) {
    row.is_max = !rows.empty() && row.count == *max_count;
    row.violation = row.count >= full_count;
    if (row.violation) violations->push_back(row.subset);
    if (row.is_max && max_subset->empty()) *max_subset = row.subset;
  }
}

}  // namespace

const char* strategy_name(ScanStrategy s) {
  switch (s) {
    case ScanStrategy::AllSubsets:
      return "all_subsets";
    case ScanStrategy::Deletions:
      return "deletions";
    case ScanStrategy::Random:
      return "random";
  }
  return "unknown";
}

ScanStrategy parse_strategy(const std::string& name) {
  if (name == "all" || name == "all_subsets") return ScanStrategy::AllSubsets;
  if (name == "deletions") return ScanStrategy::Deletions;
  if (name == "random") return ScanStrategy::Random;
  throw std::invalid_argument("unknown scan strategy: " + name);
}

ScanResult scan_subsets(long long n, int r, int k, ScanStrategy strategy, const ScanOptions& scan,
                        const ExecOptions& opts) {
  if (n < 1 || n > 62) throw std::invalid_argument("subset scans support 1 <= n <= 62");
  const auto start = Clock::now();
  ScanResult result;
  result.n = n;
  result.r = r;
  result.k = k;
  result.strategy = strategy_name(strategy);
  result.full_count = count_pruned(GroundSet::interval(n), r, k, opts).count;

  const auto masks = build_subset_masks(n, strategy, scan);
  ExecOptions per_subset = opts;
  per_subset.workers = 1;  // parallelism is across subsets here
  auto outcome = scan_masks(n, masks, opts.workers, [&](const std::vector<long long>& elems) {
    return count_pruned(GroundSet::subset(n, elems), r, k, per_subset).count;
  });
  result.rows = std::move(outcome.rows);
  result.partial = outcome.partial;
  result.subsets_scanned = outcome.scanned;
  mark_extremes(result.rows, result.full_count, &result.max_subset, &result.max_count,
                &result.violations);
  result.elapsed_ms = ms_since(start);
  return result;
}

AwResult anti_vdw(const GroundSet& s, int k, const ExecOptions& opts) {
  if (k < 2) throw std::invalid_argument("anti-van-der-Waerden number needs k >= 2");
  if (s.size() > 64)
    throw std::invalid_argument("anti-van-der-Waerden computation supports |S| <= 64");
  const auto start = Clock::now();
  if (ap_count(s, k) == 0)
    throw std::domain_error("anti-van-der-Waerden number undefined: ground set has no " +
                            std::to_string(k) + "-AP");

  const int m = s.size();
  auto detail = exact_color_counts_detailed(s, k, m, opts, true);
  int t_best = 0;
  for (int t = 1; t <= m; ++t)
    if (detail.counts[static_cast<size_t>(t)] > 0) t_best = t;
  // an injective coloring makes some AP rainbow, so t_best < m here
  if (t_best == 0) throw std::logic_error("no rainbow-free coloring found at any t");

  AwResult result{
      s.descriptor(), k, t_best + 1,
      Coloring(s, t_best, detail.witness_colors[static_cast<size_t>(t_best)]),
      false,
      std::move(detail.counts),
      detail.nodes,
      0.0};

  // merge monotonicity, re-verified on every witness found: collapsing two
  // color classes of a rainbow-free exact t-coloring must leave an exact
  // (t-1)-coloring that is still rainbow-free
  bool merge_ok = true;
  for (int t = 2; t <= t_best && merge_ok; ++t) {
    const auto& colors = detail.witness_colors[static_cast<size_t>(t)];
    if (colors.empty()) continue;
    for (int a = 1; a <= t && merge_ok; ++a) {
      for (int b = a + 1; b <= t && merge_ok; ++b) {
        std::vector<int> merged(colors.size());
        for (size_t i = 0; i < colors.size(); ++i) {
          int c = colors[i] == b ? a : colors[i];
          if (c > b) --c;  // relabel down so colors stay 1..t-1
          merged[i] = c;
        }
        Coloring candidate(s, t - 1, std::move(merged));
        merge_ok = candidate.is_exact() && !rainbow_witness(candidate, k).has_value();
      }
    }
  }
  result.merge_check_passed = merge_ok;
  result.elapsed_ms = ms_since(start);
  return result;
}

CyclicCompareReport cyclic_compare(long long n, int r, int k, const ExecOptions& opts) {
  if (n < 1) throw std::invalid_argument("cyclic comparison needs n >= 1");
  const auto start = Clock::now();
  CyclicCompareReport report;
  report.n = n;
  report.r = r;
  report.k = k;
  report.g_interval = count_pruned(GroundSet::interval(n), r, k, opts).count;
  report.g_cyclic = count_pruned(GroundSet::cyclic(n), r, k, opts).count;
  if (report.g_cyclic > report.g_interval)
    throw std::logic_error("cyclic count exceeded interval count; wrap-around constraints lost");
  report.cyclic_ratio = BigRat(report.g_cyclic, nat_pow(static_cast<std::uint64_t>(k - 1),
                                                        static_cast<std::uint64_t>(n)));
  report.target = binomial(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(k - 1));
  report.elapsed_ms = ms_since(start);
  return report;
}

SidonReport sidon_experiment(long long n, int r, ScanStrategy strategy, const ScanOptions& scan,
                             const ExecOptions& opts) {
  if (n < 1 || n > 62) throw std::invalid_argument("sidon experiment supports 1 <= n <= 62");
  const auto start = Clock::now();
  const LinearPattern pattern = LinearPattern::sidon();
  const GroundSet full = GroundSet::interval(n);

  SidonReport report;
  report.n = n;
  report.r = r;
  report.strategy = strategy_name(strategy);
  report.g_full = count_pattern_free(full, r, pattern, opts).count;
  // every coloring with at most 3 colors is free of rainbow 4-element sets
  report.few_color_fraction =
      r <= 3 ? BigRat(1) : BigRat(few_color_count(r, 4, n), report.g_full);

  const auto masks = build_subset_masks(n, strategy, scan);
  ExecOptions per_subset = opts;
  per_subset.workers = 1;
  auto outcome = scan_masks(n, masks, opts.workers, [&](const std::vector<long long>& elems) {
    return count_pattern_free(GroundSet::subset(n, elems), r, pattern, per_subset).count;
  });
  report.rows = std::move(outcome.rows);
  report.partial = outcome.partial;
  mark_extremes(report.rows, report.g_full, &report.max_subset, &report.max_count,
                &report.violations);
  report.full_is_max = report.violations.empty();
  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace rainbowap
