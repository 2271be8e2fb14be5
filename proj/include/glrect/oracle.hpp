#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "glrect/bigint.hpp"

namespace glrect::oracle {

/// Brute-force counters. They are deliberately plain backtracking over
/// labels so that they can serve as ground truth for the tiling engine.

/// Rows of labels 1..n, row 0 first (the fixed bottom row for triangles and
/// trapezoids).
struct ArrayInstance {
  std::vector<std::vector<int>> rows;

  /// Rows joined by '/', labels within a row by spaces: "1 2 3/3 1/2".
  std::string to_string() const;
};

using Visitor = std::function<void(const ArrayInstance&)>;

/// How a two-row shift is read.
enum class ShiftConvention {
  PositionMinusValue,  ///< forbid i - p(i) in S
  ValueMinusPosition,  ///< forbid p(i) - i in S
};

constexpr int kMaxPermutationLength = 12;
constexpr int kMaxRectangleLength = 8;
constexpr int kMaxTrapezoidBase = 9;
constexpr int kMaxTriangleSide = 7;

/// Permutations p of [n] with i - p(i) not in S (or p(i) - i, per convention).
BigInt count_generalized_perms(const std::set<int>& shifts, int n,
                               ShiftConvention convention = ShiftConvention::PositionMinusValue,
                               const Visitor& visit = {});

/// 3 x n arrays, rows permutations of [n], M[i][j] != M[i'][j'] whenever
/// j' - j is in S_ii'. With reduced == true row 0 is fixed to 1..n.
BigInt count_glr3(const std::set<int>& s12, const std::set<int>& s13, const std::set<int>& s23, int n,
                  bool reduced = true, const Visitor& visit = {});

/// Reduced three-row Latin trapezoids of base n: rows of n, n-1, n-2 distinct
/// labels from [n]; the cell at (row r, position j) differs from row r' < r
/// at positions j and j + (r - r').
BigInt count_trapezoid3(int n, const Visitor& visit = {});

/// Reduced Latin triangles of side n (rows n, n-1, ..., 1) with the same
/// line rules as the trapezoid.
BigInt count_latin_triangle(int n, const Visitor& visit = {});

}  // namespace glrect::oracle
