#include "glrect/tiling_dp.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <map>
#include <stdexcept>
#include <utility>

#include "glrect/linear_system.hpp"

namespace glrect {

std::vector<int> BoardShape::row_lengths(int n) const {
  if (n < min_length()) throw std::invalid_argument("board length below the shape's minimum");
  std::vector<int> lengths(static_cast<std::size_t>(rows), n);
  if (kind == BoardKind::Trapezoid3) {
    if (rows != 3) throw std::invalid_argument("trapezoid boards have three rows");
    lengths = {n, n - 1, n - 2};
  }
  return lengths;
}

// ---------------------------------------------------------------- ScanContext

ScanContext::ScanContext(const TileAlphabet& alphabet, std::vector<int> row_lengths)
    : alphabet_(&alphabet),
      row_lengths_(std::move(row_lengths)),
      rows_(alphabet.rows),
      window_(alphabet.max_width()) {
  if (static_cast<int>(row_lengths_.size()) != rows_) {
    throw std::invalid_argument("row lengths do not match the alphabet's row count");
  }
  if (window_ * rows_ > 64) throw std::invalid_argument("tiles too wide for the scan window");
  if (!std::is_sorted(row_lengths_.rbegin(), row_lengths_.rend())) {
    throw std::invalid_argument("row lengths must be nonincreasing");
  }
  columns_ = row_lengths_.empty() ? 0 : std::max(0, row_lengths_.front());
  for (std::size_t i = 0; i < alphabet.tiles.size(); ++i) {
    const Tile& tile = alphabet.tiles[i];
    std::uint64_t bits = 0;
    for (const auto& c : tile.cells) bits |= std::uint64_t{1} << (c.dx * rows_ + c.row);
    placements_.push_back(Placement{i, tile.anchor().row, bits, tile.coefficient,
                                    alphabet.weight_monomial(tile)});
  }
}

std::uint64_t ScanContext::blocked_bits(int column, int offset) const {
  std::uint64_t bits = 0;
  for (int r = 0; r < rows_; ++r) {
    if (column >= row_lengths_[static_cast<std::size_t>(r)]) {
      bits |= std::uint64_t{1} << (offset * rows_ + r);
    }
  }
  return bits;
}

Profile ScanContext::initial() const {
  Profile p;
  for (int offset = 0; offset < window_; ++offset) p.occupied |= blocked_bits(offset, offset);
  return p;
}

std::vector<Successor> profile_successors(Profile profile, const ScanContext& context, int column) {
  const std::uint64_t full = context.column_mask();
  const std::uint64_t current = profile.occupied & full;
  if (current == full) {
    Profile next{(profile.occupied >> context.rows()) |
                 context.blocked_bits(column + context.window(), context.window() - 1)};
    return {Successor{next, std::nullopt}};
  }
  const int free_row = std::countr_one(current);
  std::vector<Successor> out;
  for (const auto& placement : context.placements()) {
    if (placement.anchor_row != free_row) continue;
    if ((profile.occupied & placement.bits) != 0) continue;
    out.push_back(Successor{Profile{profile.occupied | placement.bits}, placement.tile});
  }
  return out;
}

// ---------------------------------------------------------------- sweep

namespace {

using StateMap = std::map<std::uint64_t, Polynomial>;

// Covers every free cell of `column` (one row phase at a time, always on the
// leftmost free cell) and then advances the window by one column.
StateMap fill_column(StateMap states, const ScanContext& context, int column, const RingPtr& ring) {
  const auto& tiles = context.alphabet().tiles;
  for (int row = 0; row < context.rows(); ++row) {
    struct Incoming {
      std::vector<Polynomial::ScaledRef> parts;
      Polynomial* carried = nullptr;
    };
    std::map<std::uint64_t, Incoming> incoming;
    for (auto& [mask, poly] : states) {
      if ((mask >> row) & 1u) {
        auto& in = incoming[mask];
        in.parts.push_back({&poly, 1, Monomial{}});
        in.carried = &poly;
        continue;
      }
      for (const auto& s : profile_successors(Profile{mask}, context, column)) {
        const Tile& tile = tiles[*s.tile];
        auto& in = incoming[s.next.occupied];
        in.parts.push_back({&poly, tile.coefficient, context.alphabet().weight_monomial(tile)});
        in.carried = nullptr;
      }
    }
    StateMap next;
    for (auto& [mask, in] : incoming) {
      Polynomial p = (in.parts.size() == 1 && in.carried != nullptr)
                         ? std::move(*in.carried)
                         : Polynomial::linear_combination(ring, in.parts);
      if (!p.is_zero()) next.emplace(mask, std::move(p));
    }
    states = std::move(next);
  }

  StateMap advanced;
  for (auto& [mask, poly] : states) {
    const auto s = profile_successors(Profile{mask}, context, column);
    if (s.size() != 1 || s.front().tile) throw std::logic_error("column left partially uncovered");
    advanced.emplace(s.front().next.occupied, std::move(poly));
  }
  return advanced;
}

}  // namespace

void sweep_rectangle(const TileAlphabet& tiles, unsigned max_n,
                     const std::function<void(unsigned n, const Polynomial& p)>& visit) {
  const RingPtr ring = tiles.ring();
  ScanContext context(tiles, std::vector<int>(static_cast<std::size_t>(tiles.rows), ScanContext::kUnbounded));
  StateMap states;
  states.emplace(context.initial().occupied, Polynomial::constant(ring, 1));
  const Polynomial zero(ring);
  for (unsigned n = 0;; ++n) {
    auto it = states.find(0);
    visit(n, it == states.end() ? zero : it->second);
    if (n == max_n) break;
    states = fill_column(std::move(states), context, static_cast<int>(n), ring);
  }
}

Polynomial board_polynomial(const TileAlphabet& tiles, std::span<const int> row_lengths) {
  const RingPtr ring = tiles.ring();
  ScanContext context(tiles, std::vector<int>(row_lengths.begin(), row_lengths.end()));
  StateMap states;
  states.emplace(context.initial().occupied, Polynomial::constant(ring, 1));
  for (int column = 0; column < context.columns(); ++column) {
    states = fill_column(std::move(states), context, column, ring);
  }
  // Past the last column every window cell is off the board.
  const std::uint64_t window_bits =
      context.window() * context.rows() == 64 ? ~std::uint64_t{0}
                                              : (std::uint64_t{1} << (context.window() * context.rows())) - 1;
  Polynomial total(ring);
  for (const auto& [mask, poly] : states) {
    if (mask != window_bits) throw std::logic_error("tile placed outside the board");
    total += poly;
  }
  return total;
}

SeriesTable weight_series(const TileAlphabet& tiles, const BoardShape& board, unsigned max_n, unsigned jobs) {
  if (board.rows != tiles.rows) throw std::invalid_argument("board and alphabet row counts differ");
  SeriesTable table(max_n + 1, Polynomial(tiles.ring()));
  if (board.kind == BoardKind::Rectangle) {
    sweep_rectangle(tiles, max_n, [&](unsigned n, const Polynomial& p) { table[n] = p; });
    return table;
  }

  const unsigned first = static_cast<unsigned>(board.min_length());
  auto compute = [&](unsigned n) {
    const auto lengths = board.row_lengths(static_cast<int>(n));
    return board_polynomial(tiles, lengths);
  };
  if (jobs <= 1) {
    for (unsigned n = first; n <= max_n; ++n) table[n] = compute(n);
    return table;
  }
  // Largest boards first so the slowest jobs start early.
  for (unsigned hi = max_n + 1; hi > first;) {
    const unsigned lo = hi > first + jobs ? hi - jobs : first;
    std::vector<std::future<Polynomial>> pending;
    for (unsigned n = lo; n < hi; ++n) pending.push_back(std::async(std::launch::async, compute, n));
    for (unsigned n = lo; n < hi; ++n) table[n] = pending[n - lo].get();
    hi = lo;
  }
  return table;
}

// ---------------------------------------------------------------- kernel

TransferSystem transfer_system(const TileAlphabet& tiles) {
  const RingPtr ring = tiles.ring();
  ScanContext context(tiles, std::vector<int>(static_cast<std::size_t>(tiles.rows), ScanContext::kUnbounded));
  TransferSystem system;
  std::map<std::uint64_t, std::size_t> index;
  std::vector<std::map<std::size_t, Polynomial>> rows;

  system.states.push_back(context.initial());
  index.emplace(context.initial().occupied, 0);
  for (std::size_t i = 0; i < system.states.size(); ++i) {
    StateMap start;
    start.emplace(system.states[i].occupied, Polynomial::constant(ring, 1));
    auto reached = fill_column(std::move(start), context, 0, ring);
    std::map<std::size_t, Polynomial> row;
    for (auto& [mask, poly] : reached) {
      auto [it, inserted] = index.emplace(mask, system.states.size());
      if (inserted) system.states.push_back(Profile{mask});
      row.emplace(it->second, std::move(poly));
    }
    rows.push_back(std::move(row));
  }

  const std::size_t n = system.states.size();
  system.transfer.assign(n, std::vector<Polynomial>(n, Polynomial(ring)));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& [j, poly] : rows[i]) system.transfer[i][j] = std::move(poly);
  }
  return system;
}

RationalKernel kernel2(const std::set<int>& shifts) {
  const TileAlphabet tiles = enumerate_tiles(ShiftSpec::two_row(shifts));
  const TransferSystem automaton = transfer_system(tiles);
  const RingPtr& series_ring = Ring::kernel();
  const RingPtr& weight_ring = Ring::two_row();
  const std::size_t n = automaton.states.size();

  // F_p = [p empty] + X * sum_q T(p,q) F_q
  LinearSystem system{series_ring, {}, {}};
  system.matrix.assign(n, std::vector<Polynomial>(n, Polynomial(series_ring)));
  system.rhs.assign(n, Polynomial(series_ring));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const Polynomial identity = Polynomial::constant(weight_ring, p == q ? 1 : 0);
      system.matrix[p][q] = join_series_variable({identity, -automaton.transfer[p][q]}, series_ring);
    }
  }
  system.rhs[0] = Polynomial::constant(series_ring, 1);
  return solve_linear_system(system).front();
}

}  // namespace glrect
