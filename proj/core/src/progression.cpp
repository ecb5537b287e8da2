#include "rainbowap/progression.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace rainbowap {

namespace detail {

long long reduce_mod(long long x, long long n) {
  long long r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace detail

std::vector<Progression> enumerate_k_aps(const GroundSet& s, int k) {
  std::vector<Progression> out;
  for_each_k_ap(s, k, [&](const Progression& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::uint64_t ap_count(const GroundSet& s, int k) {
  if (k < 2) throw std::invalid_argument("k-AP needs k >= 2");
  switch (s.kind()) {
    case GroundKind::Interval: {
      // per-difference count: difference d fits n - (k-1)d first terms
      const long long n = s.ambient();
      std::uint64_t total = 0;
      for (long long d = 1; (k - 1) * d <= n - 1; ++d)
        total += static_cast<std::uint64_t>(n - (k - 1) * d);
      return total;
    }
    case GroundKind::Subset: {
      std::uint64_t total = 0;
      for (long long a : s.elements()) total += ap_count_starting_at(a, s, k);
      return total;
    }
    case GroundKind::Cyclic: {
      // distinct residue sets require dedup; count canonical keys only
      const long long n = s.ambient();
      if (k > n) return 0;
      std::set<std::vector<long long>> seen;
      std::vector<long long> residues(static_cast<size_t>(k));
      for (long long a = 0; a < n; ++a) {
        for (long long d = 1; d < n; ++d) {
          bool distinct = true;
          for (int i = 0; i < k && distinct; ++i) {
            residues[static_cast<size_t>(i)] = detail::reduce_mod(a + i * d, n);
            for (int j = 0; j < i; ++j)
              if (residues[static_cast<size_t>(j)] == residues[static_cast<size_t>(i)]) {
                distinct = false;
                break;
              }
          }
          if (!distinct) continue;
          std::vector<long long> key(residues);
          std::sort(key.begin(), key.end());
          seen.insert(std::move(key));
        }
      }
      return seen.size();
    }
  }
  return 0;
}

std::uint64_t ap_count_closed_form(long long n, int k) {
  if (k < 2) throw std::invalid_argument("k-AP needs k >= 2");
  if (n < k) throw std::invalid_argument("closed form needs n >= k");
  if (n > 1'000'000'000) throw std::invalid_argument("closed form needs n <= 1e9 (n^2 must fit)");
  const long long step = k - 1;
  const long long rem = n % step;  // residue class of n mod (k-1), in [0, k-2]
  const long long numerator = n * n - n * step + rem * (step - rem);
  assert(numerator % (2 * step) == 0);
  return static_cast<std::uint64_t>(numerator / (2 * step));
}

std::uint64_t ap_count_starting_at(long long a, const GroundSet& s, int k) {
  if (k < 2) throw std::invalid_argument("k-AP needs k >= 2");
  if (!s.contains(a)) throw std::invalid_argument("first term is not in the ground set");
  if (s.kind() == GroundKind::Cyclic) {
    const long long n = s.ambient();
    std::uint64_t total = 0;
    std::vector<long long> residues(static_cast<size_t>(k));
    for (long long d = 1; d < n; ++d) {
      bool distinct = true;
      for (int i = 0; i < k && distinct; ++i) {
        residues[static_cast<size_t>(i)] = detail::reduce_mod(a + i * d, n);
        for (int j = 0; j < i; ++j)
          if (residues[static_cast<size_t>(j)] == residues[static_cast<size_t>(i)]) {
            distinct = false;
            break;
          }
      }
      if (distinct) ++total;
    }
    return total;
  }
  const long long hi = s.elements().back();
  const long long max_d = (hi - a) / (k - 1);
  std::uint64_t total = 0;
  for (long long d = 1; d <= max_d; ++d) {
    bool inside = true;
    for (int i = 1; i < k; ++i)
      if (!s.contains(a + i * d)) {
        inside = false;
        break;
      }
    if (inside) ++total;
  }
  return total;
}

std::vector<std::set<long long>> refine_difference_rounds(long long a, std::set<long long> diffs,
                                                          const std::set<long long>& base, int k) {
  if (k < 2) throw std::invalid_argument("difference refinement needs k >= 2");
  std::vector<std::set<long long>> rounds;
  rounds.push_back(diffs);
  for (int i = 1; i <= k - 1; ++i) {
    std::set<long long> next;
    for (long long d : diffs)
      if (base.count(a + static_cast<long long>(i) * d)) next.insert(d);
    diffs = std::move(next);
    rounds.push_back(diffs);
  }
  return rounds;
}

std::set<long long> refine_difference_set(long long a, std::set<long long> diffs,
                                          const std::set<long long>& base, int k) {
  auto rounds = refine_difference_rounds(a, std::move(diffs), base, k);
  return rounds.back();
}

}  // namespace rainbowap
