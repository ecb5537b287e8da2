#pragma once

#include "rainbowap/ground.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace rainbowap {

// A k-term arithmetic progression, identified with its element set: the same
// set of values is never listed twice, which is what rainbow-ness depends on.
// For interval/subset grounds the canonical first term is the minimum member
// and diff >= 1; for cyclic grounds (first, diff) record the first traversal
// encountered and the sorted residue set is the dedup key.
struct Progression {
  long long first = 0;
  long long diff = 0;
  int length = 0;
  std::vector<long long> members;  // ascending

  bool operator==(const Progression&) const = default;
};

// Visits every k-AP of s exactly once, in ascending (first, diff) order.
// Return false from fn to stop early.
template <typename Fn>
void for_each_k_ap(const GroundSet& s, int k, Fn&& fn);

std::vector<Progression> enumerate_k_aps(const GroundSet& s, int k);

// Number of k-APs in s, counted per (first term, difference) without building
// the progression list. Throws on k < 2.
std::uint64_t ap_count(const GroundSet& s, int k);

// Exact closed form for the interval [n] in integer arithmetic; requires
// n >= k >= 2 and always equals ap_count(interval(n), k).
std::uint64_t ap_count_closed_form(long long n, int k);

// Number of k-APs of s whose canonical first term is a. Summed over all a in
// a non-cyclic s this gives ap_count(s, k). For cyclic grounds it counts
// traversals starting at a (the per-set canonicalization has no first term).
std::uint64_t ap_count_starting_at(long long a, const GroundSet& s, int k);

// Iterative difference refinement: runs k-1 rounds, round i keeping exactly
// the d with a + i*d in base. The result equals the one-shot set
// {d in diffs : a + i*d in base for all i in [k-1]}.
std::set<long long> refine_difference_set(long long a, std::set<long long> diffs,
                                          const std::set<long long>& base, int k);

// Same refinement with the set recorded after every round; rounds[0] is the
// input and rounds[k-1] the final set.
std::vector<std::set<long long>> refine_difference_rounds(long long a, std::set<long long> diffs,
                                                          const std::set<long long>& base, int k);

namespace detail {

long long reduce_mod(long long x, long long n);

template <typename Fn>
bool visit_noncyclic_aps(const GroundSet& s, int k, Fn&& fn) {
  const auto& elems = s.elements();
  const long long hi = elems.back();
  for (long long a : elems) {
    const long long max_d = (hi - a) / (k - 1);
    for (long long d = 1; d <= max_d; ++d) {
      bool inside = true;
      for (int i = 1; i < k; ++i) {
        if (!s.contains(a + i * d)) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      Progression p;
      p.first = a;
      p.diff = d;
      p.length = k;
      p.members.reserve(k);
      for (int i = 0; i < k; ++i) p.members.push_back(a + i * d);
      if (!fn(p)) return false;
    }
  }
  return true;
}

template <typename Fn>
bool visit_cyclic_aps(const GroundSet& s, int k, Fn&& fn) {
  const long long n = s.ambient();
  if (k > n) return true;
  std::set<std::vector<long long>> seen;
  std::vector<long long> residues(static_cast<size_t>(k));
  for (long long a = 0; a < n; ++a) {
    for (long long d = 1; d < n; ++d) {
      bool distinct = true;
      for (int i = 0; i < k && distinct; ++i) {
        residues[static_cast<size_t>(i)] = reduce_mod(a + i * d, n);
        for (int j = 0; j < i; ++j)
          if (residues[static_cast<size_t>(j)] == residues[static_cast<size_t>(i)]) {
            distinct = false;
            break;
          }
      }
      if (!distinct) continue;
      std::vector<long long> key(residues);
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      Progression p;
      p.first = a;
      p.diff = d;
      p.length = k;
      p.members = std::move(key);
      if (!fn(p)) return false;
    }
  }
  return true;
}

}  // namespace detail

template <typename Fn>
void for_each_k_ap(const GroundSet& s, int k, Fn&& fn) {
  if (k < 2) throw std::invalid_argument("k-AP needs k >= 2");
  if (s.kind() == GroundKind::Cyclic)
    detail::visit_cyclic_aps(s, k, fn);
  else
    detail::visit_noncyclic_aps(s, k, fn);
}

}  // namespace rainbowap
