#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "glrect/polynomial.hpp"

namespace glrect {

/// Forbidden-shift sets of a generalized Latin rectangle problem. For rows
/// i < i' the set S_ii' forbids M[i][j] == M[i'][j'] whenever j' - j lies in
/// it. Rows are 0-based; row 0 is the fixed identity row.
class ShiftSpec {
 public:
  using ShiftSet = std::set<int>;

  static ShiftSpec two_row(ShiftSet s12);
  static ShiftSpec three_row(ShiftSet s12, ShiftSet s13, ShiftSet s23);

  int rows() const noexcept { return rows_; }
  /// Shifts for the ordered row pair (low, high), low < high < rows().
  const ShiftSet& shifts(int low, int high) const;

  /// Every shift negated: the left-right mirror image of the problem.
  ShiftSpec negated() const;

  std::string to_string() const;

  bool operator==(const ShiftSpec&) const = default;

 private:
  ShiftSpec(int rows, std::array<ShiftSet, 3> sets);
  static std::size_t pair_index(int low, int high);

  int rows_ = 2;
  std::array<ShiftSet, 3> sets_;
};

struct Cell {
  int dx = 0;
  int row = 0;
  auto operator<=>(const Cell&) const = default;
};

/// One violation edge: cells `low` and `high` (rows differ, low.row < high.row)
/// with low.dx == 0 and high.dx == shift.
struct EdgeTemplate {
  Cell low;
  Cell high;
  int shift = 0;
  auto operator<=>(const EdgeTemplate&) const = default;
};

enum class WeightTag { Unit, X, X1, X2, X3, X23 };

std::string_view to_string(WeightTag tag);

/// A connected vertex set of violation edges, up to horizontal translation.
/// Cells are sorted column-major (dx, then row) with min dx == 0, so cells[0]
/// is the cell the tiling scan anchors on.
struct Tile {
  std::vector<Cell> cells;
  int coefficient = 1;
  WeightTag weight = WeightTag::Unit;

  int width() const;
  const Cell& anchor() const { return cells.front(); }
  bool operator==(const Tile&) const = default;
};

/// The finite tile alphabet of a ShiftSpec.
struct TileAlphabet {
  int rows = 2;
  std::vector<Tile> tiles;

  int max_width() const;
  /// Ring the weight tags live in: (x) for two rows, (x1,x2,x3,x23) for three.
  RingPtr ring() const;
  /// coefficient-free monomial of a tile's weight tag in ring().
  Monomial weight_monomial(const Tile& tile) const;
};

std::vector<EdgeTemplate> build_edges(const ShiftSpec& spec);

/// Signed count of connected edge subsets spanning exactly `cells`:
/// sum of (-1)^{#edges}. Singletons get 1.
int tile_coefficient(std::span<const Cell> cells, std::span<const EdgeTemplate> edges);

WeightTag assign_weight(std::span<const Cell> cells, int rows);

/// Singletons plus every connected, at-most-one-cell-per-row vertex set
/// spanned by edge translates, with coefficients and weight tags. Tiles with
/// coefficient 0 are dropped. Deterministic order.
TileAlphabet enumerate_tiles(const ShiftSpec& spec);

/// One line per tile: "(dx,row) (dx,row) ... coeff=<c> weight=<tag>".
std::string dump_tiles(const TileAlphabet& alphabet);

}  // namespace glrect
