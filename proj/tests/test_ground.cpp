#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rainbowap/ground.hpp"

#include <cstdio>
#include <fstream>

using namespace rainbowap;

TEST_CASE("interval ground set is 1..n") {
  auto s = make_ground(GroundKind::Interval, 5);
  CHECK(s.elements() == std::vector<long long>{1, 2, 3, 4, 5});
  CHECK(s.size() == 5);
  CHECK(s.ambient() == 5);
}

TEST_CASE("subset input is deduplicated and sorted") {
  auto s = make_ground(GroundKind::Subset, 6, {4, 2, 2});
  CHECK(s.elements() == std::vector<long long>{2, 4});
}

TEST_CASE("cyclic ground set is the residues 0..n-1") {
  auto s = make_ground(GroundKind::Cyclic, 4);
  CHECK(s.elements() == std::vector<long long>{0, 1, 2, 3});
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(make_ground(GroundKind::Interval, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_ground(GroundKind::Subset, 5, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_ground(GroundKind::Subset, 5, {6}), std::invalid_argument);
  CHECK_THROWS_AS(make_ground(GroundKind::Subset, 5, {0}), std::invalid_argument);
  CHECK_THROWS_AS(make_ground(GroundKind::Cyclic, 0), std::invalid_argument);
  // materialization guard: a mistyped huge n fails instead of eating memory
  CHECK_THROWS_AS(make_ground(GroundKind::Interval, 1'000'000'000'000LL), std::invalid_argument);
  CHECK_THROWS_AS(make_ground(GroundKind::Cyclic, 1'000'000'000'000LL), std::invalid_argument);
}

TEST_CASE("membership") {
  CHECK(GroundSet::interval(5).contains(3));
  CHECK_FALSE(GroundSet::interval(5).contains(6));
  CHECK_FALSE(GroundSet::subset(6, {2, 4}).contains(3));
  CHECK(GroundSet::cyclic(4).contains(7));   // 7 mod 4 = 3
  CHECK(GroundSet::cyclic(4).contains(-1));  // -1 mod 4 = 3
}

TEST_CASE("contains is consistent with the element list") {
  for (const auto& s : {GroundSet::interval(9), GroundSet::subset(9, {1, 4, 5, 8}),
                        GroundSet::cyclic(9)}) {
    int hits = 0;
    for (long long x = s.kind() == GroundKind::Cyclic ? 0 : 1;
         x <= s.ambient() - (s.kind() == GroundKind::Cyclic ? 1 : 0); ++x)
      if (s.contains(x)) ++hits;
    CHECK(hits == s.size());
    for (long long x : s.elements()) {
      CHECK(s.contains(x));
      CHECK(s.position_of(x).has_value());
    }
  }
}

TEST_CASE("rebuilding from a ground set's own elements is the identity") {
  auto s = GroundSet::subset(9, {3, 1, 7});
  auto rebuilt = make_ground(s.kind(), s.ambient(), s.elements());
  CHECK(s == rebuilt);
  auto i = GroundSet::interval(6);
  CHECK(make_ground(GroundKind::Interval, 6) == i);
}

TEST_CASE("position order is ascending element value") {
  auto s = GroundSet::subset(10, {2, 5, 9});
  CHECK(*s.position_of(2) == 0);
  CHECK(*s.position_of(5) == 1);
  CHECK(*s.position_of(9) == 2);
  CHECK_FALSE(s.position_of(3).has_value());
}

TEST_CASE("descriptors are canonical") {
  CHECK(GroundSet::interval(5).descriptor() == "interval:5");
  CHECK(GroundSet::subset(6, {4, 2}).descriptor() == "subset:6:2,4");
  CHECK(GroundSet::cyclic(4).descriptor() == "cyclic:4");
}

TEST_CASE("subset literal parsing") {
  auto s = parse_subset_literal("1,2,5,9");
  CHECK(s.elements() == std::vector<long long>{1, 2, 5, 9});
  CHECK(s.ambient() == 9);
  auto t = parse_subset_literal("5,2", 8);
  CHECK(t.ambient() == 8);
  CHECK(t.elements() == std::vector<long long>{2, 5});
  CHECK_THROWS_AS(parse_subset_literal(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_subset_literal("1,,3"), std::invalid_argument);
}

TEST_CASE("subset literal from a file") {
  const std::string path = "ground_elems_test.txt";
  {
    std::ofstream out(path);
    out << "4\n2\n7\n";
  }
  auto s = parse_subset_literal("@" + path);
  CHECK(s.elements() == std::vector<long long>{2, 4, 7});
  std::remove(path.c_str());
  CHECK_THROWS_AS(parse_subset_literal("@no_such_file_anywhere.txt"), std::invalid_argument);
}
