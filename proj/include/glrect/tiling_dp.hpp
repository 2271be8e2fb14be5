#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "glrect/polynomial.hpp"
#include "glrect/rational_kernel.hpp"
#include "glrect/tileset.hpp"

namespace glrect {

enum class BoardKind { Rectangle, Trapezoid3 };

/// Row lengths as a function of the board length n. Rectangles have every
/// row of length n; the three-row trapezoid has rows n, n-1, n-2.
struct BoardShape {
  BoardKind kind = BoardKind::Rectangle;
  int rows = 2;

  static BoardShape rectangle(int rows) { return {BoardKind::Rectangle, rows}; }
  static BoardShape trapezoid3() { return {BoardKind::Trapezoid3, 3}; }

  /// Smallest n the shape is defined for.
  int min_length() const noexcept { return kind == BoardKind::Trapezoid3 ? 3 : 0; }
  /// Throws std::invalid_argument for n < min_length().
  std::vector<int> row_lengths(int n) const;
};

/// Occupancy of the scan window. Bit (dx * rows + row) covers the cell dx
/// columns right of the current column; out-of-board cells read as occupied.
struct Profile {
  std::uint64_t occupied = 0;
  auto operator<=>(const Profile&) const = default;
};

/// Geometry shared by every profile of one scan: alphabet, window width and
/// the board's row lengths (use kUnbounded for an endless strip).
class ScanContext {
 public:
  static constexpr int kUnbounded = 1 << 30;

  ScanContext(const TileAlphabet& alphabet, std::vector<int> row_lengths);

  const TileAlphabet& alphabet() const noexcept { return *alphabet_; }
  int rows() const noexcept { return rows_; }
  int window() const noexcept { return window_; }
  int columns() const noexcept { return columns_; }

  /// Profile at column 0 before any tile is placed.
  Profile initial() const;
  /// Occupancy bits of one board column placed at window offset `offset`.
  std::uint64_t blocked_bits(int column, int offset) const;
  std::uint64_t column_mask() const noexcept { return (std::uint64_t{1} << rows_) - 1; }

  struct Placement {
    std::size_t tile;
    int anchor_row;
    std::uint64_t bits;
    long coefficient;
    Monomial weight;
  };
  const std::vector<Placement>& placements() const noexcept { return placements_; }

 private:
  const TileAlphabet* alphabet_;
  std::vector<int> row_lengths_;
  int rows_;
  int window_;
  int columns_;
  std::vector<Placement> placements_;
};

/// A move out of a profile: a tile index placed on the leftmost free cell, or
/// (tile empty) the advance to the next column once the current one is full.
struct Successor {
  Profile next;
  std::optional<std::size_t> tile;
};

/// Duplicate-free successors of `profile` while scanning `column`.
std::vector<Successor> profile_successors(Profile profile, const ScanContext& context, int column);

/// P_n for n = 0..N. Rectangle boards are built in one left-to-right sweep;
/// trapezoid boards are tiled per n (entries below n = 3 stay zero).
using SeriesTable = std::vector<Polynomial>;

SeriesTable weight_series(const TileAlphabet& tiles, const BoardShape& board, unsigned max_n,
                          unsigned jobs = 1);

/// Streams P_n of the rectangle board for n = 0..max_n as the sweep passes
/// each column boundary.
void sweep_rectangle(const TileAlphabet& tiles, unsigned max_n,
                     const std::function<void(unsigned n, const Polynomial& p)>& visit);

/// Weight enumerator of exact tilings of a board with the given row lengths.
Polynomial board_polynomial(const TileAlphabet& tiles, std::span<const int> row_lengths);

/// Column-boundary automaton of the endless strip: states[0] is the empty
/// profile and transfer[p][q] is the weight of filling one column from p to q.
struct TransferSystem {
  std::vector<Profile> states;
  std::vector<std::vector<Polynomial>> transfer;
};

TransferSystem transfer_system(const TileAlphabet& tiles);

/// Sum over n of P_n X^n for two-row shift set S, as a normalized kernel.
RationalKernel kernel2(const std::set<int>& shifts);

}  // namespace glrect
