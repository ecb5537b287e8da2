#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rainbowap/counting.hpp"
#include "rainbowap/progression.hpp"

#include <random>

using namespace rainbowap;

TEST_CASE("surjection counts") {
  for (long long s = 1; s <= 10; ++s) CHECK(surjection_count(1, s) == 1);
  CHECK(surjection_count(2, 3) == 6);
  CHECK(surjection_count(3, 3) == 6);  // 27 - 24 + 3
  for (int t = 1; t <= 6; ++t)
    for (long long s = 0; s < t; ++s) CHECK(surjection_count(t, s) == 0);
  for (int t = 1; t <= 6; ++t)
    for (int s = t; s <= 6; ++s) {
      CAPTURE(t);
      CAPTURE(s);
      CHECK(surjection_count(t, s) == oracles::surjections_enumerated(t, s));
    }
}

TEST_CASE("few-color counts") {
  CHECK(few_color_count(3, 3, 3) == 21);  // 3 * 2^3 - 3
  CHECK(few_color_count(3, 3, 4) == 45);  // 3 * 2^4 - 3
  CHECK_THROWS_AS(few_color_count(2, 3, 5), std::invalid_argument);

  // both algebraic routes agree
  for (int r = 2; r <= 8; ++r)
    for (int k = 2; k <= r; ++k)
      for (long long s : {1LL, 2LL, 3LL, 7LL, 20LL, 60LL})
        CHECK(few_color_count(r, k, s) == few_color_count_via_surjections(r, k, s));

  // r = k: definitional identity against the surjection table
  for (int k = 2; k <= 6; ++k)
    for (long long s = 1; s <= 10; ++s) {
      BigNat expect = 0;
      for (int j = 1; j <= k - 1; ++j)
        expect += binomial(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(j)) *
                  surjection_count(j, s);
      CHECK(few_color_count(k, k, s) == expect);
    }

  // counting colorings with at most k-1 of r colors never exceeds r^s
  for (int r = 3; r <= 6; ++r)
    for (long long s = 1; s <= 8; ++s)
      CHECK(few_color_count(r, 3, s) <= nat_pow(static_cast<std::uint64_t>(r),
                                                static_cast<std::uint64_t>(s)));
}

TEST_CASE("anchor counts by brute force") {
  CHECK(count_bruteforce(GroundSet::interval(3), 3, 3).count == 21);
  CHECK(count_bruteforce(GroundSet::interval(4), 3, 3).count == 51);
}

TEST_CASE("the trivial regime returns r^|S| from every counter") {
  for (const auto& s : {GroundSet::interval(6), GroundSet::subset(9, {2, 3, 5, 8}),
                        GroundSet::cyclic(5)}) {
    for (int k = 3; k <= 4; ++k)
      for (int r = 1; r < k; ++r) {
        const BigNat expect = nat_pow(static_cast<std::uint64_t>(r),
                                      static_cast<std::uint64_t>(s.size()));
        CHECK(count_bruteforce(s, r, k).count == expect);
        CHECK(count_pruned(s, r, k).count == expect);
        CHECK(count_symmetry(s, r, k).count == expect);
        CHECK(count_inclusion_exclusion(s, r, k).count == expect);
      }
  }
  // pruned takes the short circuit: no search nodes at all
  CHECK(count_pruned(GroundSet::interval(10), 2, 3).nodes == 0);
}

TEST_CASE("no constraints means all colorings are free") {
  auto s = GroundSet::subset(4, {1, 2, 4});
  auto rep = count_pruned(s, 3, 3);
  CHECK(rep.count == 27);
  CHECK(rep.nodes == 0);
  CHECK(count_inclusion_exclusion(s, 3, 3).count == 27);
}

TEST_CASE("pruned and symmetry match the anchors") {
  CHECK(count_pruned(GroundSet::interval(4), 3, 3).count == 51);
  CHECK(count_symmetry(GroundSet::interval(3), 3, 3).count == 21);
  CHECK(count_symmetry(GroundSet::interval(4), 3, 3).count == 51);
  CHECK(count_inclusion_exclusion(GroundSet::interval(4), 3, 3).count == 51);
  CHECK(count_inclusion_exclusion(GroundSet::interval(5), 3, 3).count ==
        count_bruteforce(GroundSet::interval(5), 3, 3).count);
}

TEST_CASE("oracle triangle on small sets") {
  std::mt19937 rng(2025);
  std::vector<GroundSet> grounds;
  for (long long n = 3; n <= 7; ++n) grounds.push_back(GroundSet::interval(n));
  for (long long n = 3; n <= 7; ++n) grounds.push_back(GroundSet::cyclic(n));
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<long long> elems;
    for (long long x = 1; x <= 8; ++x)
      if (rng() % 2) elems.push_back(x);
    if (elems.empty()) continue;
    grounds.push_back(GroundSet::subset(8, elems));
  }
  for (const auto& s : grounds)
    for (auto [r, k] : std::vector<std::pair<int, int>>{{3, 3}, {4, 3}, {4, 4}}) {
      CAPTURE(s.descriptor());
      CAPTURE(r);
      CAPTURE(k);
      const BigNat expect = oracles::brute_rainbow_free_count(s, r, k);
      CHECK(count_bruteforce(s, r, k).count == expect);
      CHECK(count_pruned(s, r, k).count == expect);
      CHECK(count_symmetry(s, r, k).count == expect);
      if (ap_count(s, k) <= 20) CHECK(count_inclusion_exclusion(s, r, k).count == expect);
    }
}

TEST_CASE("counts never exceed r^|S| and grow with r") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<long long> elems;
    for (long long x = 1; x <= 9; ++x)
      if (rng() % 2) elems.push_back(x);
    if (elems.empty()) continue;
    auto s = GroundSet::subset(9, elems);
    BigNat prev = 0;
    for (int r = 1; r <= 5; ++r) {
      const BigNat g = count_pruned(s, r, 3).count;
      CHECK(g <= nat_pow(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(s.size())));
      CHECK(g >= prev);
      prev = g;
    }
  }
}

TEST_CASE("exact color counts") {
  auto e = exact_color_counts(GroundSet::interval(3), 3, 3);
  CHECK(e[1] == 1);
  CHECK(e[2] == 6);
  CHECK(e[3] == 0);

  // decomposition identity: g = sum_t C(r,t) e_t
  for (long long n = 3; n <= 7; ++n)
    for (int k : {3, 4}) {
      auto s = GroundSet::interval(n);
      auto counts = exact_color_counts(s, k, static_cast<int>(n));
      for (int r = 2; r <= 5; ++r) {
        BigNat total = 0;
        for (int t = 1; t <= static_cast<int>(n); ++t)
          total += binomial(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(t)) *
                   counts[static_cast<size_t>(t)];
        CHECK(total == count_pruned(s, r, k).count);
      }
    }

  // t beyond |S| is impossible
  auto wide = exact_color_counts(GroundSet::interval(4), 3, 6);
  CHECK(wide[5] == 0);
  CHECK(wide[6] == 0);

  // unconstrained ground sets degenerate to plain surjection counts
  auto free = exact_color_counts(GroundSet::subset(4, {1, 2, 4}), 3, 3);
  for (int t = 1; t <= 3; ++t)
    CHECK(free[static_cast<size_t>(t)] == surjection_count(t, 3));
}

TEST_CASE("exact color counts match a direct surjective enumeration") {
  // oracle: every map [n] -> [t], kept when onto [t] and rainbow-free
  auto oracle_e = [](const GroundSet& s, int k, int t) {
    const auto ap_sets = oracles::brute_k_ap_sets(s, k);
    const int m = s.size();
    std::vector<int> color(static_cast<size_t>(m), 1);
    BigNat total = 0;
    while (true) {
      std::uint64_t hit = 0;
      for (int c : color) hit |= 1ULL << (c - 1);
      if (hit == (1ULL << t) - 1) {
        bool ok = true;
        for (const auto& set : ap_sets) {
          std::uint64_t mask = 0;
          bool rainbow = true;
          for (long long x : set) {
            const std::uint64_t bit = 1ULL << (color[static_cast<size_t>(*s.position_of(x))] - 1);
            if (mask & bit) {
              rainbow = false;
              break;
            }
            mask |= bit;
          }
          if (rainbow) {
            ok = false;
            break;
          }
        }
        if (ok) total += 1;
      }
      int p = m - 1;
      while (p >= 0 && color[static_cast<size_t>(p)] == t) {
        color[static_cast<size_t>(p)] = 1;
        --p;
      }
      if (p < 0) break;
      ++color[static_cast<size_t>(p)];
    }
    return total;
  };
  for (long long n = 3; n <= 6; ++n)
    for (int k : {3, 4}) {
      const auto s = GroundSet::interval(n);
      const auto counts = exact_color_counts(s, k, static_cast<int>(n));
      for (int t = 1; t <= static_cast<int>(n); ++t) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(t);
        CHECK(counts[static_cast<size_t>(t)] == oracle_e(s, k, t));
      }
    }
  // cyclic grounds go through the same path
  const auto z5 = GroundSet::cyclic(5);
  const auto counts = exact_color_counts(z5, 3, 5);
  for (int t = 1; t <= 5; ++t)
    CHECK(counts[static_cast<size_t>(t)] == oracle_e(z5, 3, t));
}

TEST_CASE("k = 2 few-color counts collapse to constant colorings") {
  for (int r = 2; r <= 6; ++r)
    for (long long s = 1; s <= 10; ++s) CHECK(few_color_count(r, 2, s) == r);
}

TEST_CASE("r = k edge at k = 5") {
  const auto s = GroundSet::interval(10);
  const BigNat expect = count_bruteforce(s, 5, 5).count;
  CHECK(count_pruned(s, 5, 5).count == expect);
  CHECK(count_symmetry(s, 5, 5).count == expect);
  const auto z = GroundSet::cyclic(8);
  const BigNat zc = count_bruteforce(z, 4, 4).count;
  CHECK(count_pruned(z, 4, 4).count == zc);
  CHECK(count_symmetry(z, 4, 4).count == zc);
  if (ap_count(z, 4) <= 20) CHECK(count_inclusion_exclusion(z, 4, 4).count == zc);
}

TEST_CASE("pattern-free counting") {
  CHECK(count_pattern_free(GroundSet::interval(4), 4, LinearPattern::sidon()).count == 232);

  // a pattern with no solutions constrains nothing
  auto no_fit = count_pattern_free(GroundSet::interval(3), 4, LinearPattern::sidon());
  CHECK(no_fit.count == 64);

  // the second-difference matrix reproduces plain AP counting
  for (long long n = 3; n <= 8; ++n)
    for (int k : {3, 4})
      for (int r = 2; r <= 4; ++r) {
        if (n < k) continue;
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(r);
        CHECK(count_pattern_free(GroundSet::interval(n), r, LinearPattern::ap_matrix(k)).count ==
              count_pruned(GroundSet::interval(n), r, k).count);
      }

  CHECK_THROWS_AS(count_pattern_free(GroundSet::cyclic(5), 3, LinearPattern::sidon()),
                  std::invalid_argument);
}

TEST_CASE("methods agree across worker counts, nodes included") {
  auto s = GroundSet::interval(9);
  for (int r : {3, 4}) {
    CountReport base_pruned, base_sym, base_brute;
    for (int workers : {1, 2, 8}) {
      ExecOptions opts;
      opts.workers = workers;
      auto pruned = count_pruned(s, r, 3, opts);
      auto sym = count_symmetry(s, r, 3, opts);
      auto brute = count_bruteforce(s, r, 3, opts);
      auto ie = count_inclusion_exclusion(s, r, 3, opts);
      if (workers == 1) {
        base_pruned = pruned;
        base_sym = sym;
        base_brute = brute;
      } else {
        CHECK(pruned.count == base_pruned.count);
        CHECK(pruned.nodes == base_pruned.nodes);
        CHECK(sym.count == base_sym.count);
        CHECK(sym.nodes == base_sym.nodes);
        CHECK(brute.count == base_brute.count);
        CHECK(brute.nodes == base_brute.nodes);
      }
      CHECK(ie.count == base_pruned.count);
    }
  }
}

TEST_CASE("budget contracts") {
  // the brute-force ceiling is checked before any work happens
  ExecOptions tight;
  tight.budget.bruteforce_ceiling = 1000;
  CHECK_THROWS_AS(count_bruteforce(GroundSet::interval(12), 3, 3, tight), BudgetExceeded);

  ExecOptions few_nodes;
  few_nodes.budget.max_nodes = 50;
  CHECK_THROWS_AS(count_pruned(GroundSet::interval(12), 4, 3, few_nodes), BudgetExceeded);

  ExecOptions ie_cap;
  ie_cap.budget.max_ie_constraints = 3;
  CHECK_THROWS_AS(count_inclusion_exclusion(GroundSet::interval(8), 3, 3, ie_cap),
                  BudgetExceeded);

  try {
    count_pruned(GroundSet::interval(12), 4, 3, few_nodes);
    CHECK(false);
  } catch (const BudgetExceeded& e) {
    CHECK(e.nodes > 0);  // failure reports how far it got
  }
}

TEST_CASE("reports carry the run parameters") {
  auto rep = count_pruned(GroundSet::interval(4), 3, 3);
  CHECK(rep.ground == "interval:4");
  CHECK(rep.r == 3);
  CHECK(rep.k_or_pattern == "3");
  CHECK(rep.method == "pruned");
  auto pattern_rep = count_pattern_free(GroundSet::interval(4), 4, LinearPattern::sidon());
  CHECK(pattern_rep.k_or_pattern == "1x4:1,-1,1,-1");
}

TEST_CASE("ratio reports") {
  auto r33 = ratio_report(3, 3, 3);
  CHECK(r33.count == 21);
  CHECK(r33.ratio == BigRat(21, 8));
  CHECK(r33.lower == BigRat(21, 8));
  CHECK(r33.target == 3);

  auto r43 = ratio_report(4, 3, 3);
  CHECK(r43.count == 51);
  CHECK(r43.ratio == BigRat(51, 16));
  CHECK(r43.lower == BigRat(45, 16));

  // the few-color lower ratio is exactly 3 - 3/2^n when r = k = 3
  for (long long n = 3; n <= 12; ++n) {
    auto rep = ratio_report(n, 3, 3);
    const BigNat pow2 = nat_pow(2, static_cast<std::uint64_t>(n));
    CHECK(rep.lower == BigRat(3 * pow2 - 3, pow2));
    CHECK(rep.lower <= rep.ratio);
  }

  CHECK_THROWS_AS(ratio_report(5, 2, 3), std::invalid_argument);
}

TEST_CASE("method dispatch") {
  auto s = GroundSet::interval(5);
  CHECK(count_rainbow_free(s, 3, 3, CountMethod::Auto).method == "pruned");
  CHECK(count_rainbow_free(s, 3, 3, CountMethod::BruteForce).method == "bruteforce");
  CHECK(count_rainbow_free(s, 3, 3, CountMethod::Symmetry).method == "symmetry");
  CHECK(count_rainbow_free(s, 3, 3, CountMethod::InclusionExclusion).method ==
        "inclusion_exclusion");
  CHECK(parse_method("ie") == CountMethod::InclusionExclusion);
  CHECK_THROWS_AS(parse_method("nonsense"), std::invalid_argument);
}
