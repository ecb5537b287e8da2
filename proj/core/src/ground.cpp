#include "rainbowap/ground.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rainbowap {

namespace {

long long reduce_mod(long long x, long long n) {
  long long r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

GroundSet::GroundSet(GroundKind kind, long long n, std::vector<long long> elements)
    : kind_(kind), n_(n), elements_(std::move(elements)) {}

namespace {

// ground sets materialize their element list; this keeps a mistyped n from
// exhausting memory (exact counting is infeasible long before this anyway)
constexpr long long kMaxMaterializedElements = 50'000'000;

void check_materializable(long long n) {
  if (n > kMaxMaterializedElements)
    throw std::invalid_argument("ground sets above 5e7 elements are not supported");
}

}  // namespace

GroundSet GroundSet::interval(long long n) {
  if (n < 1) throw std::invalid_argument("interval ground set needs n >= 1");
  check_materializable(n);
  std::vector<long long> elems(static_cast<size_t>(n));
  std::iota(elems.begin(), elems.end(), 1LL);
  return GroundSet(GroundKind::Interval, n, std::move(elems));
}

GroundSet GroundSet::subset(long long n, std::vector<long long> elements) {
  if (n < 1) throw std::invalid_argument("subset ground set needs n >= 1");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw std::invalid_argument("subset ground set must be non-empty");
  if (elements.front() < 1 || elements.back() > n)
    throw std::invalid_argument("subset element out of range [1, n]");
  return GroundSet(GroundKind::Subset, n, std::move(elements));
}

GroundSet GroundSet::cyclic(long long n) {
  if (n < 1) throw std::invalid_argument("cyclic ground set needs n >= 1");
  check_materializable(n);
  std::vector<long long> elems(static_cast<size_t>(n));
  std::iota(elems.begin(), elems.end(), 0LL);
  return GroundSet(GroundKind::Cyclic, n, std::move(elems));
}

bool GroundSet::contains(long long x) const {
  switch (kind_) {
    case GroundKind::Interval:
      return x >= 1 && x <= n_;
    case GroundKind::Cyclic:
      return true;  // every integer reduces to a residue
    case GroundKind::Subset:
      return std::binary_search(elements_.begin(), elements_.end(), x);
  }
  return false;
}

std::optional<int> GroundSet::position_of(long long x) const {
  switch (kind_) {
    case GroundKind::Interval:
      if (x < 1 || x > n_) return std::nullopt;
      return static_cast<int>(x - 1);
    case GroundKind::Cyclic:
      return static_cast<int>(reduce_mod(x, n_));
    case GroundKind::Subset: {
      auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
      if (it == elements_.end() || *it != x) return std::nullopt;
      return static_cast<int>(it - elements_.begin());
    }
  }
  return std::nullopt;
}

std::string GroundSet::descriptor() const {
  std::ostringstream out;
  switch (kind_) {
    case GroundKind::Interval:
      out << "interval:" << n_;
      break;
    case GroundKind::Cyclic:
      out << "cyclic:" << n_;
      break;
    case GroundKind::Subset:
      out << "subset:" << n_ << ":";
      for (size_t i = 0; i < elements_.size(); ++i) {
        if (i > 0) out << ",";
        out << elements_[i];
      }
      break;
  }
  return out.str();
}

GroundSet make_ground(GroundKind kind, long long n, std::vector<long long> elements) {
  switch (kind) {
    case GroundKind::Interval:
      return GroundSet::interval(n);
    case GroundKind::Subset:
      return GroundSet::subset(n, std::move(elements));
    case GroundKind::Cyclic:
      return GroundSet::cyclic(n);
  }
  throw std::invalid_argument("unknown ground kind");
}

GroundSet parse_subset_literal(const std::string& literal, long long ambient) {
  std::vector<long long> elems;
  if (!literal.empty() && literal[0] == '@') {
    std::ifstream in(literal.substr(1));
    if (!in) throw std::invalid_argument("cannot open element file: " + literal.substr(1));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      size_t pos = 0;
      long long v = std::stoll(line, &pos);
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos != line.size()) throw std::invalid_argument("bad element line: " + line);
      elems.push_back(v);
    }
  } else {
    std::stringstream ss(literal);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw std::invalid_argument("empty item in subset literal");
      elems.push_back(std::stoll(item));
    }
  }
  if (elems.empty()) throw std::invalid_argument("subset literal has no elements");
  if (ambient == 0) ambient = *std::max_element(elems.begin(), elems.end());
  return GroundSet::subset(ambient, std::move(elems));
}

}  // namespace rainbowap
