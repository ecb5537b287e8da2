#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rainbowap/pattern.hpp"
#include "rainbowap/progression.hpp"

#include <random>
#include <sstream>

using namespace rainbowap;

TEST_CASE("pattern file round trip") {
  std::istringstream in("1 4\n1 -1 1 -1\n");
  auto m = LinearPattern::parse(in);
  CHECK(m == LinearPattern::sidon());
  CHECK(m.descriptor() == "1x4:1,-1,1,-1");

  std::istringstream bad_header("x\n");
  CHECK_THROWS_AS(LinearPattern::parse(bad_header), std::invalid_argument);
  std::istringstream truncated("2 3\n1 -2 1\n");
  CHECK_THROWS_AS(LinearPattern::parse(truncated), std::invalid_argument);
  CHECK_THROWS_AS(LinearPattern::from_rows({{0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(LinearPattern::from_rows({{2'000'000, -1}}), std::invalid_argument);
}

TEST_CASE("second-difference matrix shape") {
  auto m = LinearPattern::ap_matrix(4);
  CHECK(m.rows == 2);
  CHECK(m.cols == 4);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == -2);
  CHECK(m.at(0, 2) == 1);
  CHECK(m.at(1, 1) == 1);
  CHECK(m.at(1, 2) == -2);
  CHECK(m.at(1, 3) == 1);
}

TEST_CASE("sidon solutions in [4]") {
  auto sols = enumerate_pattern_solutions(LinearPattern::sidon(), GroundSet::interval(4));
  REQUIRE(sols.size() == 8);
  // all eight pair {1,4} against {2,3} in some orientation
  for (const auto& t : sols) {
    CHECK(t[0] + t[2] == t[1] + t[3]);
    std::vector<long long> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<long long>{1, 2, 3, 4});
  }
  // lexicographic order, first and last pinned
  CHECK(sols.front() == std::vector<long long>{1, 2, 4, 3});
  CHECK(sols.back() == std::vector<long long>{4, 3, 1, 2});
}

TEST_CASE("x1 + x2 = x3 in [3]") {
  auto m = LinearPattern::from_rows({{1, 1, -1}});
  auto sols = enumerate_pattern_solutions(m, GroundSet::interval(3));
  REQUIRE(sols.size() == 2);
  CHECK(sols[0] == std::vector<long long>{1, 2, 3});
  CHECK(sols[1] == std::vector<long long>{2, 1, 3});
}

TEST_CASE("solutions match the odometer oracle") {
  std::mt19937 rng(99);
  const std::vector<LinearPattern> patterns = {
      LinearPattern::sidon(), LinearPattern::from_rows({{1, 1, -1}}),
      LinearPattern::ap_matrix(3), LinearPattern::from_rows({{2, -1, -1}})};
  for (const auto& m : patterns)
    for (int trial = 0; trial < 8; ++trial) {
      const long long n = m.cols + static_cast<long long>(rng() % 5);
      std::vector<long long> elems;
      for (long long x = 1; x <= n; ++x)
        if (rng() % 4) elems.push_back(x);
      if (static_cast<int>(elems.size()) < m.cols) continue;
      auto s = GroundSet::subset(n, elems);
      CHECK(enumerate_pattern_solutions(m, s) == oracles::brute_pattern_solutions(m, s));
    }
}

TEST_CASE("second-difference solutions are the APs read both ways") {
  for (int k = 3; k <= 5; ++k) {
    auto m = LinearPattern::ap_matrix(k);
    for (long long n = k; n <= 30; ++n) {
      auto s = GroundSet::interval(n);
      CHECK(enumerate_pattern_solutions(m, s).size() == 2 * ap_count(s, k));
    }
  }
}

TEST_CASE("constraint sets dedupe the solution tuples") {
  auto sets = pattern_constraint_sets(LinearPattern::sidon(), GroundSet::interval(4));
  REQUIRE(sets.size() == 1);
  CHECK(sets[0] == std::vector<long long>{1, 2, 3, 4});
  auto ap_sets = pattern_constraint_sets(LinearPattern::ap_matrix(3), GroundSet::interval(5));
  CHECK(ap_sets.size() == ap_count(GroundSet::interval(5), 3));
}

TEST_CASE("cyclic grounds are rejected") {
  CHECK_THROWS_AS(enumerate_pattern_solutions(LinearPattern::sidon(), GroundSet::cyclic(6)),
                  std::invalid_argument);
}
