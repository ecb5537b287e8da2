#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rainbowap/bignat.hpp"
#include "rainbowap/progression.hpp"
#include "rainbowap/templates.hpp"

#include <bit>
#include <numeric>
#include <random>
#include <sstream>

using namespace rainbowap;

namespace {

// every r-coloring of [n], visited via an odometer
template <typename Fn>
void for_each_coloring(int n, int r, Fn&& fn) {
  std::vector<int> colors(static_cast<size_t>(n), 1);
  while (true) {
    fn(colors);
    int p = n - 1;
    while (p >= 0 && colors[static_cast<size_t>(p)] == r) {
      colors[static_cast<size_t>(p)] = 1;
      --p;
    }
    if (p < 0) break;
    ++colors[static_cast<size_t>(p)];
  }
}

Coloring interval_coloring(int n, int r, std::vector<int> colors) {
  return Coloring(GroundSet::interval(n), r, std::move(colors));
}

}  // namespace

TEST_CASE("a coloring becomes a template of singleton palettes") {
  auto c = interval_coloring(3, 3, {1, 1, 1});
  auto p = coloring_to_template(c, 3);
  for (long long x = 1; x <= 3; ++x) CHECK(p.palette(x) == 0b001);

  auto sparse = Coloring(GroundSet::subset(5, {2, 4}), 2, {1, 2});
  auto q = coloring_to_template(sparse, 5);
  CHECK(q.palette(1) == 0);
  CHECK(q.palette(2) == 0b01);
  CHECK(q.palette(3) == 0);
  CHECK(q.palette(4) == 0b10);
  CHECK(q.palette(5) == 0);

  auto embedded = coloring_to_template(interval_coloring(2, 2, {1, 2}), 4);
  int singletons = 0, empties = 0;
  for (long long x = 1; x <= 4; ++x) {
    if (embedded.palette(x) == 0)
      ++empties;
    else if (std::popcount(embedded.palette(x)) == 1)
      ++singletons;
  }
  CHECK(singletons == 2);
  CHECK(empties == 2);

  CHECK_THROWS_AS(coloring_to_template(interval_coloring(3, 2, {1, 2, 1}), 2),
                  std::invalid_argument);
}

TEST_CASE("subtemplate is pointwise palette inclusion") {
  auto p2 = Template::full(4, 3);
  CHECK(is_subtemplate(p2, p2));
  CHECK(is_subtemplate(Template(4, 3), p2));  // all-empty
  Template p1(4, 3);
  p1.set_palette(2, 0b010);
  Template other(4, 3);
  other.set_palette(2, 0b001);
  CHECK(is_subtemplate(p1, p2));
  CHECK_FALSE(is_subtemplate(p1, other));
  CHECK_THROWS_AS(is_subtemplate(Template(3, 3), p2), std::invalid_argument);
  CHECK_THROWS_AS(is_subtemplate(Template(4, 2), p2), std::invalid_argument);
}

TEST_CASE("rainbow witness") {
  auto id3 = interval_coloring(3, 3, {1, 2, 3});
  auto w = rainbow_witness(id3, 3);
  REQUIRE(w.has_value());
  CHECK(w->members == std::vector<long long>{1, 2, 3});

  // fewer than k colors used can never produce a rainbow k-AP
  CHECK_FALSE(rainbow_witness(interval_coloring(6, 5, {1, 2, 1, 2, 1, 2}), 3).has_value());

  CHECK_FALSE(rainbow_witness(interval_coloring(4, 3, {1, 2, 2, 3}), 3).has_value());

  // the witness is the first rainbow AP in canonical order
  auto c = interval_coloring(5, 3, {1, 2, 3, 1, 2});  // {1,2,3} and {3,4,5} both rainbow
  auto first = rainbow_witness(c, 3);
  REQUIRE(first.has_value());
  CHECK(first->members == std::vector<long long>{1, 2, 3});
}

TEST_CASE("rainbow subtemplate count of the full template") {
  // 4 APs, each with 3! injective color picks
  CHECK(count_rainbow_subtemplates(Template::full(5, 3), 3) == 24);
  for (long long n = 3; n <= 20; ++n)
    for (int r = 3; r <= 5; ++r)
      for (int k = 3; k <= r; ++k)
        CHECK(count_rainbow_subtemplates(Template::full(n, r), k) ==
              BigNat(ap_count(GroundSet::interval(n), k)) *
                  falling_factorial(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(k)));
}

TEST_CASE("rainbow-free colorings induce zero-count templates") {
  auto c = interval_coloring(4, 3, {1, 2, 2, 3});
  CHECK(count_rainbow_subtemplates(coloring_to_template(c, 4), 3) == 0);

  Template p = Template::full(5, 3);
  p.set_palette(3, 0);  // element 3 lies on all four 3-APs of [5]
  CHECK(count_rainbow_subtemplates(p, 3) == 0);
}

TEST_CASE("rainbow AP counts of colorings") {
  CHECK(count_rainbow_aps_of_coloring(interval_coloring(3, 3, {1, 2, 3}), 3) == 1);
  CHECK(count_rainbow_aps_of_coloring(interval_coloring(4, 3, {1, 2, 3, 1}), 3) == 2);
  CHECK(count_rainbow_aps_of_coloring(interval_coloring(5, 3, {2, 2, 2, 2, 2}), 3) == 0);
}

TEST_CASE("template count equals the coloring count, exhaustively") {
  for (int n = 3; n <= 6; ++n)
    for (int r = 2; r <= 3; ++r)
      for (int k : {3, 4})
        for_each_coloring(n, r, [&](const std::vector<int>& colors) {
          auto c = interval_coloring(n, r, colors);
          const BigNat via_template = count_rainbow_subtemplates(coloring_to_template(c, n), k);
          const BigNat direct = count_rainbow_aps_of_coloring(c, k);
          CHECK(via_template == direct);
          CHECK((direct == 0) == !rainbow_witness(c, k).has_value());
        });
}

TEST_CASE("subtemplate monotonicity of the rainbow count") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const long long n = 4 + static_cast<long long>(rng() % 8);
    const int r = 3 + static_cast<int>(rng() % 3);
    Template outer(n, r);
    for (long long x = 1; x <= n; ++x)
      outer.set_palette(x, rng() & ((1ULL << r) - 1));
    Template inner(n, r);
    for (long long x = 1; x <= n; ++x)
      inner.set_palette(x, outer.palette(x) & rng());
    REQUIRE(is_subtemplate(inner, outer));
    const int k = 3 + static_cast<int>(rng() % 2);
    CHECK(count_rainbow_subtemplates(inner, k) <= count_rainbow_subtemplates(outer, k));
  }
}

TEST_CASE("color permutations preserve the rainbow count; merges never raise it") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const int r = 3 + static_cast<int>(rng() % 2);
    std::vector<int> colors(static_cast<size_t>(n));
    for (auto& c : colors) c = 1 + static_cast<int>(rng() % r);
    auto c = interval_coloring(n, r, colors);
    const int k = 3;

    std::vector<int> perm(static_cast<size_t>(r));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> permuted(colors.size());
    for (size_t i = 0; i < colors.size(); ++i)
      permuted[i] = perm[static_cast<size_t>(colors[i] - 1)];
    CHECK(count_rainbow_aps_of_coloring(interval_coloring(n, r, permuted), k) ==
          count_rainbow_aps_of_coloring(c, k));

    const int a = 1 + static_cast<int>(rng() % r);
    const int b = 1 + static_cast<int>(rng() % r);
    if (a != b) {
      std::vector<int> merged(colors.size());
      for (size_t i = 0; i < colors.size(); ++i) merged[i] = colors[i] == b ? a : colors[i];
      CHECK(count_rainbow_aps_of_coloring(interval_coloring(n, r, merged), k) <=
            count_rainbow_aps_of_coloring(c, k));
    }
  }
}

TEST_CASE("template statistic against the threshold") {
  auto empty = template_statistic(Template(5, 3), 3);
  CHECK(empty.rainbow_subtemplates == 0);
  CHECK(empty.satisfies);

  auto full = template_statistic(Template::full(5, 3), 3);
  CHECK(full.rainbow_subtemplates == 24);
  CHECK(full.bound == doctest::Approx(std::pow(5.0, 5.0 / 3.0) / 3.0));
  CHECK_FALSE(full.satisfies);

  auto from_coloring = template_statistic(
      coloring_to_template(interval_coloring(4, 3, {1, 2, 2, 3}), 4), 3);
  CHECK(from_coloring.rainbow_subtemplates == 0);
  CHECK(from_coloring.satisfies);
}

TEST_CASE("coloring literal round trip") {
  auto ground = GroundSet::interval(4);
  auto c = parse_coloring_literal("1:1,2:2,3:2,4:3", ground, 3);
  CHECK(c.colors() == std::vector<int>{1, 2, 2, 3});
  CHECK(c.literal() == "1:1,2:2,3:2,4:3");
  CHECK(c.is_exact());
  CHECK(!parse_coloring_literal("1:1,2:1,3:1,4:1", ground, 3).is_exact());
  CHECK_THROWS_AS(parse_coloring_literal("1:1,2:2", ground, 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_coloring_literal("1:1,1:2,2:1,3:1,4:1", ground, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_coloring_literal("1:1,2:2,3:9,4:1", ground, 3), std::invalid_argument);
}

TEST_CASE("template file parsing") {
  std::istringstream in("1: 1 2\n2:\n3: 3\n");
  auto p = parse_template_file(in);
  CHECK(p.order() == 3);
  CHECK(p.num_colors() == 3);
  CHECK(p.palette(1) == 0b011);
  CHECK(p.palette(2) == 0);
  CHECK(p.palette(3) == 0b100);

  std::istringstream padded("2: 1\n");
  auto q = parse_template_file(padded, 5, 4);
  CHECK(q.order() == 5);
  CHECK(q.num_colors() == 4);
  CHECK(q.palette(2) == 0b0001);
  CHECK(q.palette(5) == 0);

  std::istringstream bad("nonsense\n");
  CHECK_THROWS_AS(parse_template_file(bad), std::invalid_argument);
}
