#pragma once

#include "rainbowap/bignat.hpp"
#include "rainbowap/ground.hpp"
#include "rainbowap/progression.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rainbowap {

// One color in [r] per ground-set element. A coloring is "exact" when it is
// onto [r]. Colors are 1-based; storage is by element position.
class Coloring {
 public:
  Coloring(GroundSet ground, int r, std::vector<int> colors);

  const GroundSet& ground() const { return ground_; }
  int num_colors() const { return r_; }
  const std::vector<int>& colors() const { return colors_; }
  int color_at_position(int pos) const { return colors_[static_cast<size_t>(pos)]; }
  int color_of(long long element) const;
  int colors_used() const;
  bool is_exact() const { return colors_used() == r_; }

  // "e:c" pairs, comma separated, elements ascending: "1:1,2:2,3:2".
  std::string literal() const;

  bool operator==(const Coloring&) const = default;

 private:
  GroundSet ground_;
  int r_;
  std::vector<int> colors_;
};

Coloring parse_coloring_literal(const std::string& literal, const GroundSet& ground, int r);

// A palette P(x) subseteq [r] for every x in [n]. Palettes are color bitmasks
// (bit c-1 = color c), so r <= 64. Elements outside the intended support keep
// the empty palette.
class Template {
 public:
  Template(long long order, int r);

  long long order() const { return order_; }
  int num_colors() const { return r_; }
  std::uint64_t palette(long long x) const;
  void set_palette(long long x, std::uint64_t mask);

  // Every palette the full [r].
  static Template full(long long order, int r);

  bool operator==(const Template&) const = default;

 private:
  long long order_;
  int r_;
  std::vector<std::uint64_t> palettes_;
};

// A coloring of S subseteq [n] viewed as an order-n template: singleton
// palettes on S, empty palettes elsewhere. Throws if an element falls
// outside [order].
Template coloring_to_template(const Coloring& c, long long order);

// Pointwise palette inclusion; throws on order or color-count mismatch.
bool is_subtemplate(const Template& inner, const Template& outer);

// First k-AP of the coloring's ground set (canonical order) whose members
// receive pairwise-distinct colors, if any. The coloring is rainbow
// k-AP-free iff this returns nullopt.
std::optional<Progression> rainbow_witness(const Coloring& c, int k);

// Number of rainbow k-AP subtemplates of p: over all k-APs of [order], the
// number of ways to pick one palette color per member with all k picks
// pairwise distinct.
BigNat count_rainbow_subtemplates(const Template& p, int k);

// Number of k-APs of the coloring's ground set that are rainbow under c;
// equals count_rainbow_subtemplates of the coloring's template for
// non-cyclic grounds.
BigNat count_rainbow_aps_of_coloring(const Coloring& c, int k);

// The rainbow-subtemplate count next to the threshold n^(2-1/k) / k.
// satisfies is decided exactly: (rk * k)^k < n^(2k-1).
struct TemplateStatistic {
  long long order = 0;
  int r = 0;
  int k = 0;
  BigNat rainbow_subtemplates;
  double bound = 0.0;
  bool satisfies = false;
};
TemplateStatistic template_statistic(const Template& p, int k);

// One line per element, "x: c1 c2 ..." with an empty list allowed; blank
// lines and lines starting with '#' are skipped. order/r are inferred from
// the data when the hints are 0.
Template parse_template_file(std::istream& in, long long order_hint = 0, int r_hint = 0);
Template load_template_file(const std::string& path, long long order_hint = 0, int r_hint = 0);

}  // namespace rainbowap
