#include "rainbowap/templates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rainbowap {

Coloring::Coloring(GroundSet ground, int r, std::vector<int> colors)
    : ground_(std::move(ground)), r_(r), colors_(std::move(colors)) {
  if (r_ < 1 || r_ > 64) throw std::invalid_argument("coloring needs 1 <= r <= 64");
  if (static_cast<int>(colors_.size()) != ground_.size())
    throw std::invalid_argument("coloring must assign exactly one color per element");
  for (int c : colors_)
    if (c < 1 || c > r_) throw std::invalid_argument("color out of range [1, r]");
}

int Coloring::color_of(long long element) const {
  auto pos = ground_.position_of(element);
  if (!pos) throw std::invalid_argument("element is not in the ground set");
  return colors_[static_cast<size_t>(*pos)];
}

int Coloring::colors_used() const {
  std::uint64_t mask = 0;
  for (int c : colors_) mask |= 1ULL << (c - 1);
  return static_cast<int>(std::popcount(mask));
}

std::string Coloring::literal() const {
  std::ostringstream out;
  const auto& elems = ground_.elements();
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i > 0) out << ",";
    out << elems[i] << ":" << colors_[i];
  }
  return out.str();
}

Coloring parse_coloring_literal(const std::string& literal, const GroundSet& ground, int r) {
  std::vector<int> colors(static_cast<size_t>(ground.size()), 0);
  std::vector<char> seen(static_cast<size_t>(ground.size()), 0);
  std::stringstream ss(literal);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("coloring literal: missing ':' in " + item);
    long long elem = std::stoll(item.substr(0, colon));
    int color = std::stoi(item.substr(colon + 1));
    auto pos = ground.position_of(elem);
    if (!pos) throw std::invalid_argument("coloring literal: element not in ground set: " + item);
    if (seen[static_cast<size_t>(*pos)])
      throw std::invalid_argument("coloring literal: element assigned twice: " + item);
    seen[static_cast<size_t>(*pos)] = 1;
    colors[static_cast<size_t>(*pos)] = color;
  }
  for (char s : seen)
    if (!s) throw std::invalid_argument("coloring literal: not every ground-set element is colored");
  return Coloring(ground, r, std::move(colors));
}

Template::Template(long long order, int r) : order_(order), r_(r) {
  if (order_ < 1) throw std::invalid_argument("template needs order >= 1");
  if (order_ > 50'000'000) throw std::invalid_argument("template orders above 5e7 are not supported");
  if (r_ < 1 || r_ > 64) throw std::invalid_argument("template needs 1 <= r <= 64");
  palettes_.assign(static_cast<size_t>(order_), 0);
}

std::uint64_t Template::palette(long long x) const {
  if (x < 1 || x > order_) throw std::invalid_argument("template element out of range [1, order]");
  return palettes_[static_cast<size_t>(x - 1)];
}

void Template::set_palette(long long x, std::uint64_t mask) {
  if (x < 1 || x > order_) throw std::invalid_argument("template element out of range [1, order]");
  if (r_ < 64 && (mask >> r_) != 0)
    throw std::invalid_argument("palette uses a color above r");
  palettes_[static_cast<size_t>(x - 1)] = mask;
}

Template Template::full(long long order, int r) {
  Template p(order, r);
  const std::uint64_t all = r == 64 ? ~0ULL : (1ULL << r) - 1;
  for (long long x = 1; x <= order; ++x) p.set_palette(x, all);
  return p;
}

Template coloring_to_template(const Coloring& c, long long order) {
  Template p(order, c.num_colors());
  const auto& elems = c.ground().elements();
  for (size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1 || elems[i] > order)
      throw std::invalid_argument("coloring element outside [order]");
    p.set_palette(elems[i], 1ULL << (c.colors()[i] - 1));
  }
  return p;
}

bool is_subtemplate(const Template& inner, const Template& outer) {
  if (inner.order() != outer.order() || inner.num_colors() != outer.num_colors())
    throw std::invalid_argument("subtemplate test needs equal order and r");
  for (long long x = 1; x <= inner.order(); ++x)
    if ((inner.palette(x) & ~outer.palette(x)) != 0) return false;
  return true;
}

std::optional<Progression> rainbow_witness(const Coloring& c, int k) {
  if (k < 2) throw std::invalid_argument("rainbow test needs k >= 2");
  if (c.colors_used() < k) return std::nullopt;  // fewer than k colors can never go rainbow
  std::optional<Progression> hit;
  for_each_k_ap(c.ground(), k, [&](const Progression& p) {
    std::uint64_t mask = 0;
    for (long long x : p.members) {
      const std::uint64_t bit = 1ULL << (c.color_of(x) - 1);
      if (mask & bit) return true;  // repeated color, keep scanning
      mask |= bit;
    }
    hit = p;
    return false;
  });
  return hit;
}

namespace {

// Injective choices of one palette color per member; k is small so plain
// DFS over members with a used-color mask is exact and cheap.
std::uint64_t injective_palette_choices(const std::vector<std::uint64_t>& palettes) {
  std::uint64_t count = 0;
  const size_t k = palettes.size();
  std::vector<std::uint64_t> stack_mask(k + 1, 0);
  std::vector<std::uint64_t> remaining(k + 1, 0);
  size_t depth = 0;
  remaining[0] = palettes[0];
  while (true) {
    if (remaining[depth] == 0) {
      if (depth == 0) break;
      --depth;
      continue;
    }
    const std::uint64_t bit = remaining[depth] & (~remaining[depth] + 1);
    remaining[depth] &= ~bit;
    if (depth + 1 == k) {
      ++count;
      continue;
    }
    stack_mask[depth + 1] = stack_mask[depth] | bit;
    remaining[depth + 1] = palettes[depth + 1] & ~stack_mask[depth + 1];
    ++depth;
  }
  return count;
}

}  // namespace

BigNat count_rainbow_subtemplates(const Template& p, int k) {
  if (k < 2) throw std::invalid_argument("rainbow subtemplate count needs k >= 2");
  BigNat total = 0;
  const GroundSet base = GroundSet::interval(p.order());
  std::vector<std::uint64_t> palettes(static_cast<size_t>(k));
  for_each_k_ap(base, k, [&](const Progression& ap) {
    bool has_empty = false;
    for (int i = 0; i < k; ++i) {
      palettes[static_cast<size_t>(i)] = p.palette(ap.members[static_cast<size_t>(i)]);
      has_empty = has_empty || palettes[static_cast<size_t>(i)] == 0;
    }
    if (!has_empty) total += injective_palette_choices(palettes);
    return true;
  });
  return total;
}

BigNat count_rainbow_aps_of_coloring(const Coloring& c, int k) {
  if (k < 2) throw std::invalid_argument("rainbow count needs k >= 2");
  BigNat total = 0;
  for_each_k_ap(c.ground(), k, [&](const Progression& p) {
    std::uint64_t mask = 0;
    bool rainbow = true;
    for (long long x : p.members) {
      const std::uint64_t bit = 1ULL << (c.color_of(x) - 1);
      if (mask & bit) {
        rainbow = false;
        break;
      }
      mask |= bit;
    }
    if (rainbow) total += 1;
    return true;
  });
  return total;
}

TemplateStatistic template_statistic(const Template& p, int k) {
  TemplateStatistic stat;
  stat.order = p.order();
  stat.r = p.num_colors();
  stat.k = k;
  stat.rainbow_subtemplates = count_rainbow_subtemplates(p, k);
  const double n = static_cast<double>(p.order());
  stat.bound = std::pow(n, 2.0 - 1.0 / k) / k;
  // exact form of rk < n^(2-1/k) / k:  (rk * k)^k < n^(2k-1)
  BigNat lhs = stat.rainbow_subtemplates * k;
  BigNat lhs_pow = 1, rhs_pow = 1;
  for (int i = 0; i < k; ++i) lhs_pow *= lhs;
  for (int i = 0; i < 2 * k - 1; ++i) rhs_pow *= p.order();
  stat.satisfies = lhs_pow < rhs_pow;
  return stat;
}

Template parse_template_file(std::istream& in, long long order_hint, int r_hint) {
  struct Line {
    long long x;
    std::vector<int> colors;
  };
  std::vector<Line> lines;
  long long max_x = 0;
  int max_color = 0;
  std::string raw;
  while (std::getline(in, raw)) {
    if (raw.empty() || raw[0] == '#') continue;
    auto colon = raw.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("template file: missing ':' in line: " + raw);
    Line line;
    line.x = std::stoll(raw.substr(0, colon));
    std::istringstream rest(raw.substr(colon + 1));
    int c;
    while (rest >> c) {
      if (c < 1) throw std::invalid_argument("template file: colors are 1-based");
      line.colors.push_back(c);
      max_color = std::max(max_color, c);
    }
    max_x = std::max(max_x, line.x);
    lines.push_back(std::move(line));
  }
  const long long order = order_hint > 0 ? order_hint : max_x;
  const int r = r_hint > 0 ? r_hint : std::max(max_color, 1);
  Template p(order, r);
  for (const auto& line : lines) {
    std::uint64_t mask = 0;
    for (int c : line.colors) {
      if (c > r) throw std::invalid_argument("template file: color above r");
      mask |= 1ULL << (c - 1);
    }
    p.set_palette(line.x, mask);
  }
  return p;
}

Template load_template_file(const std::string& path, long long order_hint, int r_hint) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open template file: " + path);
  return parse_template_file(in, order_hint, r_hint);
}

}  // namespace rainbowap
