#include "rainbowap/counting.hpp"

#include "engine.hpp"
#include "rainbowap/progression.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rainbowap {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

CountReport make_report(const GroundSet& s, int r, std::string k_or_pattern, const char* method,
                        BigNat count, std::uint64_t nodes, Clock::time_point start) {
  CountReport rep;
  rep.ground = s.descriptor();
  rep.r = r;
  rep.k_or_pattern = std::move(k_or_pattern);
  rep.method = method;
  rep.count = std::move(count);
  rep.nodes = nodes;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

void validate_rk(int r, int k) {
  if (r < 1) throw std::invalid_argument("counting needs r >= 1");
  if (k < 2) throw std::invalid_argument("counting needs k >= 2");
  if (r > 64) throw std::invalid_argument("counting supports at most 64 colors");
}

}  // namespace

const char* method_name(CountMethod m) {
  switch (m) {
    case CountMethod::Auto:
      return "auto";
    case CountMethod::BruteForce:
      return "bruteforce";
    case CountMethod::Pruned:
      return "pruned";
    case CountMethod::Symmetry:
      return "symmetry";
    case CountMethod::InclusionExclusion:
      return "inclusion_exclusion";
  }
  return "unknown";
}

CountMethod parse_method(const std::string& name) {
  if (name == "auto") return CountMethod::Auto;
  if (name == "bruteforce") return CountMethod::BruteForce;
  if (name == "pruned") return CountMethod::Pruned;
  if (name == "symmetry") return CountMethod::Symmetry;
  if (name == "ie" || name == "inclusion_exclusion") return CountMethod::InclusionExclusion;
  throw std::invalid_argument("unknown method: " + name);
}

BigNat surjection_count(int t, long long set_size) {
  if (t < 1) throw std::invalid_argument("surjection count needs t >= 1");
  if (set_size < 0) throw std::invalid_argument("surjection count needs set size >= 0");
  if (set_size < t) return 0;  // too few elements to hit every color
  BigInt total = 0;
  for (int i = 0; i < t; ++i) {
    BigInt term = binomial(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(i)) *
                  nat_pow(static_cast<std::uint64_t>(t - i), static_cast<std::uint64_t>(set_size));
    if (i % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return BigNat(total);
}

BigNat few_color_count(int r, int k, long long set_size) {
  if (k < 2) throw std::invalid_argument("few-color count needs k >= 2");
  if (r < k) throw std::invalid_argument("few-color count needs r >= k");
  if (set_size < 1) throw std::invalid_argument("few-color count needs set size >= 1");
  BigInt total = 0;
  for (int t = 1; t <= k - 1; ++t) {
    BigInt inner = 0;
    for (int j = t; j <= k - 1; ++j) {
      BigInt term = binomial(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(j)) *
                    binomial(static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(j - t));
      if ((j - t) % 2 == 0)
        inner += term;
      else
        inner -= term;
    }
    total += nat_pow(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(set_size)) * inner;
  }
  return BigNat(total);
}

BigNat few_color_count_via_surjections(int r, int k, long long set_size) {
  if (k < 2) throw std::invalid_argument("few-color count needs k >= 2");
  if (r < k) throw std::invalid_argument("few-color count needs r >= k");
  if (set_size < 1) throw std::invalid_argument("few-color count needs set size >= 1");
  BigNat total = 0;
  for (int j = 1; j <= k - 1; ++j)
    total += binomial(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(j)) *
             surjection_count(j, set_size);
  return total;
}

CountReport count_bruteforce(const GroundSet& s, int r, int k, const ExecOptions& opts) {
  validate_rk(r, k);
  const auto start = Clock::now();
  const auto sys = detail::ap_system(s, k);
  auto res = detail::engine_bruteforce(sys, r, opts);
  return make_report(s, r, std::to_string(k), "bruteforce", std::move(res.count), res.nodes, start);
}

CountReport count_pruned(const GroundSet& s, int r, int k, const ExecOptions& opts) {
  validate_rk(r, k);
  const auto start = Clock::now();
  if (r < k) {  // no k-AP can see k distinct colors
    return make_report(s, r, std::to_string(k), "pruned",
                       nat_pow(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(s.size())),
                       0, start);
  }
  const auto sys = detail::ap_system(s, k);
  auto res = detail::engine_pruned(sys, r, opts);
  return make_report(s, r, std::to_string(k), "pruned", std::move(res.count), res.nodes, start);
}

CountReport count_symmetry(const GroundSet& s, int r, int k, const ExecOptions& opts) {
  validate_rk(r, k);
  const auto start = Clock::now();
  const BigNat trivial = nat_pow(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(s.size()));
  if (r < k) return make_report(s, r, std::to_string(k), "symmetry", trivial, 0, start);
  const auto sys = detail::ap_system(s, k);
  if (sys.sets.empty()) return make_report(s, r, std::to_string(k), "symmetry", trivial, 0, start);
  const int t_max = std::min(r, s.size());
  auto outcome = detail::engine_symmetry(sys, t_max, opts, false);
  // colorings decompose by the set of colors actually used:
  //   g = sum_t C(r, t) * t! * canonical_counts[t]
  BigNat total = 0;
  for (int t = 1; t <= t_max; ++t)
    total += binomial(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(t)) *
             factorial(static_cast<std::uint64_t>(t)) *
             outcome.canonical_counts[static_cast<size_t>(t)];
  return make_report(s, r, std::to_string(k), "symmetry", std::move(total), outcome.nodes, start);
}

CountReport count_inclusion_exclusion(const GroundSet& s, int r, int k, const ExecOptions& opts) {
  validate_rk(r, k);
  const auto start = Clock::now();
  const auto sys = detail::ap_system(s, k);
  auto res = detail::engine_inclusion_exclusion(sys, r, opts);
  return make_report(s, r, std::to_string(k), "inclusion_exclusion", std::move(res.count),
                     res.nodes, start);
}

CountReport count_rainbow_free(const GroundSet& s, int r, int k, CountMethod method,
                               const ExecOptions& opts) {
  switch (method) {
    case CountMethod::BruteForce:
      return count_bruteforce(s, r, k, opts);
    case CountMethod::Symmetry:
      return count_symmetry(s, r, k, opts);
    case CountMethod::InclusionExclusion:
      return count_inclusion_exclusion(s, r, k, opts);
    case CountMethod::Auto:
    case CountMethod::Pruned:
      return count_pruned(s, r, k, opts);
  }
  throw std::invalid_argument("unknown counting method");
}

CountReport count_pattern_free(const GroundSet& s, int r, const LinearPattern& m,
                               const ExecOptions& opts) {
  if (r < 1 || r > 64) throw std::invalid_argument("counting needs 1 <= r <= 64");
  if (s.kind() == GroundKind::Cyclic)
    throw std::invalid_argument("pattern counting is defined over [n], not cyclic groups");
  const auto start = Clock::now();
  const auto sys = detail::pattern_system(s, m);
  auto res = detail::engine_pruned(sys, r, opts);
  return make_report(s, r, m.descriptor(), "pruned", std::move(res.count), res.nodes, start);
}

ExactColorCounts exact_color_counts_detailed(const GroundSet& s, int k, int t_max,
                                             const ExecOptions& opts, bool want_witnesses) {
  if (k < 2) throw std::invalid_argument("counting needs k >= 2");
  if (t_max < 1) throw std::invalid_argument("exact color counts need t_max >= 1");
  t_max = std::min(t_max, 64);
  const int m = s.size();
  ExactColorCounts out;
  out.counts.assign(static_cast<size_t>(t_max) + 1, 0);
  out.witness_colors.assign(static_cast<size_t>(t_max) + 1, {});

  const auto sys = detail::ap_system(s, k);
  if (sys.sets.empty()) {
    // no constraints: every exact t-coloring qualifies
    for (int t = 1; t <= t_max; ++t) {
      out.counts[static_cast<size_t>(t)] = surjection_count(t, m);
      if (want_witnesses && m >= t) {
        // canonical first witness: 1 ... 1 2 3 ... t
        std::vector<int> colors(static_cast<size_t>(m), 1);
        for (int i = 0; i < t - 1; ++i) colors[static_cast<size_t>(m - t + 1 + i)] = i + 2;
        out.witness_colors[static_cast<size_t>(t)] = std::move(colors);
      }
    }
    return out;
  }

  auto outcome = detail::engine_symmetry(sys, t_max, opts, want_witnesses);
  for (int t = 1; t <= t_max; ++t)
    out.counts[static_cast<size_t>(t)] =
        factorial(static_cast<std::uint64_t>(t)) * outcome.canonical_counts[static_cast<size_t>(t)];
  out.witness_colors = std::move(outcome.witnesses);
  out.nodes = outcome.nodes;
  return out;
}

std::vector<BigNat> exact_color_counts(const GroundSet& s, int k, int t_max,
                                       const ExecOptions& opts) {
  return exact_color_counts_detailed(s, k, t_max, opts, false).counts;
}

RatioReport ratio_report(long long n, int r, int k, const ExecOptions& opts) {
  if (n < 1) throw std::invalid_argument("ratio report needs n >= 1");
  if (k < 2) throw std::invalid_argument("ratio report needs k >= 2");
  if (r < k) throw std::invalid_argument("ratio report needs r >= k");
  const auto start = Clock::now();
  const auto rep = count_pruned(GroundSet::interval(n), r, k, opts);

  RatioReport out;
  out.n = n;
  out.r = r;
  out.k = k;
  out.count = rep.count;
  out.method = rep.method;
  out.nodes = rep.nodes;
  const BigNat denom = nat_pow(static_cast<std::uint64_t>(k - 1), static_cast<std::uint64_t>(n));
  out.ratio = BigRat(rep.count, denom);
  out.lower = BigRat(few_color_count(r, k, n), denom);
  out.target = binomial(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(k - 1));
  if (k >= 3 && n >= 2) {
    const double alpha = 1.0 - std::log2(static_cast<double>(k - 2)) /
                                   std::log2(static_cast<double>(k - 1));
    const double exponent =
        -alpha * static_cast<double>(n) /
        (8.0 * std::pow(static_cast<double>(k), 3.0) * std::log2(static_cast<double>(n)));
    out.error_term = std::pow(static_cast<double>(k - 1), exponent);
  } else {
    out.error_term = std::numeric_limits<double>::quiet_NaN();
  }
  out.elapsed_ms = ms_since(start);
  return out;
}

}  // namespace rainbowap
