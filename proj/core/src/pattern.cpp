#include "rainbowap/pattern.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rainbowap {

std::string LinearPattern::descriptor() const {
  std::ostringstream out;
  out << rows << "x" << cols << ":";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out << ",";
    out << entries[i];
  }
  return out.str();
}

LinearPattern LinearPattern::from_rows(const std::vector<std::vector<long long>>& rows) {
  if (rows.empty()) throw std::invalid_argument("pattern needs at least one row");
  LinearPattern m;
  m.rows = static_cast<int>(rows.size());
  m.cols = static_cast<int>(rows.front().size());
  if (m.cols < 2) throw std::invalid_argument("pattern needs at least two columns");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m.cols)
      throw std::invalid_argument("pattern rows have unequal lengths");
    bool nonzero = false;
    for (long long v : row) {
      nonzero = nonzero || v != 0;
      // keeps row sums inside 64-bit range for any supported ground set
      if (v > 1'000'000 || v < -1'000'000)
        throw std::invalid_argument("pattern entries are limited to |entry| <= 1e6");
    }
    if (!nonzero) throw std::invalid_argument("pattern row is all zero");
    m.entries.insert(m.entries.end(), row.begin(), row.end());
  }
  return m;
}

LinearPattern LinearPattern::parse(std::istream& in) {
  int l = 0, k = 0;
  if (!(in >> l >> k)) throw std::invalid_argument("pattern file: bad header line");
  if (l < 1 || k < 2) throw std::invalid_argument("pattern file: need l >= 1, k >= 2");
  std::vector<std::vector<long long>> rows(static_cast<size_t>(l),
                                           std::vector<long long>(static_cast<size_t>(k)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < k; ++j)
      if (!(in >> rows[static_cast<size_t>(i)][static_cast<size_t>(j)]))
        throw std::invalid_argument("pattern file: truncated matrix");
  return from_rows(rows);
}

LinearPattern LinearPattern::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open pattern file: " + path);
  return parse(in);
}

LinearPattern LinearPattern::ap_matrix(int k) {
  if (k < 3) throw std::invalid_argument("second-difference matrix needs k >= 3");
  std::vector<std::vector<long long>> rows;
  for (int i = 0; i + 2 < k; ++i) {
    std::vector<long long> row(static_cast<size_t>(k), 0);
    row[static_cast<size_t>(i)] = 1;
    row[static_cast<size_t>(i + 1)] = -2;
    row[static_cast<size_t>(i + 2)] = 1;
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

LinearPattern LinearPattern::sidon() { return from_rows({{1, -1, 1, -1}}); }

namespace {

struct SolutionSearch {
  const LinearPattern& m;
  const std::vector<long long>& elems;
  // suffix bounds per row: the reachable contribution of coordinates >= j
  std::vector<std::vector<long long>> suffix_min, suffix_max;
  std::vector<long long> partial;     // per-row sum of assigned coordinates
  std::vector<char> used;             // by element position
  std::vector<long long> tuple;
  std::vector<std::vector<long long>>* out;

  SolutionSearch(const LinearPattern& pattern, const std::vector<long long>& elements,
                 std::vector<std::vector<long long>>* sink)
      : m(pattern), elems(elements), out(sink) {
    const long long lo = elems.front(), hi = elems.back();
    suffix_min.assign(static_cast<size_t>(m.rows),
                      std::vector<long long>(static_cast<size_t>(m.cols) + 1, 0));
    suffix_max = suffix_min;
    for (int i = 0; i < m.rows; ++i)
      for (int j = m.cols - 1; j >= 0; --j) {
        const long long c = m.at(i, j);
        const long long cmin = c >= 0 ? c * lo : c * hi;
        const long long cmax = c >= 0 ? c * hi : c * lo;
        suffix_min[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            suffix_min[static_cast<size_t>(i)][static_cast<size_t>(j) + 1] + cmin;
        suffix_max[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            suffix_max[static_cast<size_t>(i)][static_cast<size_t>(j) + 1] + cmax;
      }
    partial.assign(static_cast<size_t>(m.rows), 0);
    used.assign(elems.size(), 0);
    tuple.assign(static_cast<size_t>(m.cols), 0);
  }

  bool feasible(int depth) const {
    for (int i = 0; i < m.rows; ++i) {
      const long long p = partial[static_cast<size_t>(i)];
      if (p + suffix_min[static_cast<size_t>(i)][static_cast<size_t>(depth)] > 0) return false;
      if (p + suffix_max[static_cast<size_t>(i)][static_cast<size_t>(depth)] < 0) return false;
    }
    return true;
  }

  void descend(int depth) {
    if (depth == m.cols) {
      for (int i = 0; i < m.rows; ++i)
        if (partial[static_cast<size_t>(i)] != 0) return;
      out->push_back(tuple);
      return;
    }
    for (size_t pos = 0; pos < elems.size(); ++pos) {
      if (used[pos]) continue;
      const long long x = elems[pos];
      used[pos] = 1;
      tuple[static_cast<size_t>(depth)] = x;
      for (int i = 0; i < m.rows; ++i) partial[static_cast<size_t>(i)] += m.at(i, depth) * x;
      if (feasible(depth + 1)) descend(depth + 1);
      for (int i = 0; i < m.rows; ++i) partial[static_cast<size_t>(i)] -= m.at(i, depth) * x;
      used[pos] = 0;
    }
  }
};

}  // namespace

std::vector<std::vector<long long>> enumerate_pattern_solutions(const LinearPattern& m,
                                                                const GroundSet& s) {
  if (s.kind() == GroundKind::Cyclic)
    throw std::invalid_argument("pattern solutions are defined over [n], not cyclic groups");
  std::vector<std::vector<long long>> out;
  if (s.size() < m.cols) return out;  // not enough distinct values
  SolutionSearch search(m, s.elements(), &out);
  search.descend(0);
  return out;
}

std::vector<std::vector<long long>> pattern_constraint_sets(const LinearPattern& m,
                                                            const GroundSet& s) {
  std::set<std::vector<long long>> sets;
  for (auto tuple : enumerate_pattern_solutions(m, s)) {
    std::sort(tuple.begin(), tuple.end());
    sets.insert(std::move(tuple));
  }
  return {sets.begin(), sets.end()};
}

}  // namespace rainbowap
