#pragma once

#include "rainbowap/ground.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbowap {

// An l x k integer matrix whose distinct-valued solution tuples generalize
// arithmetic progressions: a solution is x in S^k with pairwise-distinct
// coordinates and M x = 0.
struct LinearPattern {
  int rows = 0;
  int cols = 0;
  std::vector<long long> entries;  // row-major

  long long at(int row, int col) const {
    return entries[static_cast<size_t>(row) * static_cast<size_t>(cols) + static_cast<size_t>(col)];
  }

  // Canonical text form, e.g. "1x4:1,-1,1,-1".
  std::string descriptor() const;

  static LinearPattern from_rows(const std::vector<std::vector<long long>>& rows);

  // File format: first line "l k", then l lines of k space-separated integers.
  static LinearPattern parse(std::istream& in);
  static LinearPattern load(const std::string& path);

  // The (k-2) x k second-difference matrix (rows x_i - 2 x_{i+1} + x_{i+2} = 0)
  // whose distinct-valued solutions are exactly the k-APs read in either
  // direction.
  static LinearPattern ap_matrix(int k);

  // The single row x1 - x2 + x3 - x4 = 0; a set avoiding its distinct-valued
  // solutions is a Sidon set.
  static LinearPattern sidon();

  bool operator==(const LinearPattern&) const = default;
};

// All ordered solution tuples in S^k with pairwise-distinct coordinates, in
// lexicographic order. Patterns are defined over [n]; cyclic grounds are
// rejected.
std::vector<std::vector<long long>> enumerate_pattern_solutions(const LinearPattern& m,
                                                                const GroundSet& s);

// The distinct element sets underlying the solutions; each set ascending, the
// list sorted. These are the constraint sets for pattern-free counting.
std::vector<std::vector<long long>> pattern_constraint_sets(const LinearPattern& m,
                                                            const GroundSet& s);

}  // namespace rainbowap
