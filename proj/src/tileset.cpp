#include "glrect/tileset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace glrect {

// ---------------------------------------------------------------- ShiftSpec

ShiftSpec::ShiftSpec(int rows, std::array<ShiftSet, 3> sets) : rows_(rows), sets_(std::move(sets)) {
  if (rows_ != 2 && rows_ != 3) throw std::invalid_argument("only 2 or 3 rows are supported");
}

ShiftSpec ShiftSpec::two_row(ShiftSet s12) { return ShiftSpec(2, {std::move(s12), {}, {}}); }

ShiftSpec ShiftSpec::three_row(ShiftSet s12, ShiftSet s13, ShiftSet s23) {
  return ShiftSpec(3, {std::move(s12), std::move(s13), std::move(s23)});
}

std::size_t ShiftSpec::pair_index(int low, int high) {
  if (low == 0 && high == 1) return 0;
  if (low == 0 && high == 2) return 1;
  if (low == 1 && high == 2) return 2;
  throw std::out_of_range("bad row pair");
}

const ShiftSpec::ShiftSet& ShiftSpec::shifts(int low, int high) const {
  if (high >= rows_) throw std::out_of_range("row pair outside the problem");
  return sets_[pair_index(low, high)];
}

ShiftSpec ShiftSpec::negated() const {
  std::array<ShiftSet, 3> sets;
  for (std::size_t i = 0; i < 3; ++i) {
    for (int s : sets_[i]) sets[i].insert(-s);
  }
  return ShiftSpec(rows_, std::move(sets));
}

namespace {

std::string set_to_string(const std::set<int>& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string ShiftSpec::to_string() const {
  if (rows_ == 2) return "S12=" + set_to_string(sets_[0]);
  return "S12=" + set_to_string(sets_[0]) + " S13=" + set_to_string(sets_[1]) +
         " S23=" + set_to_string(sets_[2]);
}

// ---------------------------------------------------------------- Tiles

std::string_view to_string(WeightTag tag) {
  switch (tag) {
    case WeightTag::Unit: return "1";
    case WeightTag::X: return "x";
    case WeightTag::X1: return "x1";
    case WeightTag::X2: return "x2";
    case WeightTag::X3: return "x3";
    case WeightTag::X23: return "x23";
  }
  return "?";
}

int Tile::width() const {
  int hi = 0;
  for (const auto& c : cells) hi = std::max(hi, c.dx);
  return hi + 1;
}

int TileAlphabet::max_width() const {
  int w = 1;
  for (const auto& t : tiles) w = std::max(w, t.width());
  return w;
}

RingPtr TileAlphabet::ring() const { return rows == 2 ? Ring::two_row() : Ring::three_row(); }

Monomial TileAlphabet::weight_monomial(const Tile& tile) const {
  switch (tile.weight) {
    case WeightTag::Unit: return Monomial{};
    case WeightTag::X: return Monomial::variable(0);
    case WeightTag::X1: return Monomial::variable(0);
    case WeightTag::X2: return Monomial::variable(1);
    case WeightTag::X3: return Monomial::variable(2);
    case WeightTag::X23: return Monomial::variable(3);
  }
  throw std::logic_error("unknown weight tag");
}

std::vector<EdgeTemplate> build_edges(const ShiftSpec& spec) {
  std::vector<EdgeTemplate> edges;
  for (int low = 0; low < spec.rows(); ++low) {
    for (int high = low + 1; high < spec.rows(); ++high) {
      for (int s : spec.shifts(low, high)) {
        edges.push_back(EdgeTemplate{Cell{0, low}, Cell{s, high}, s});
      }
    }
  }
  return edges;
}

namespace {

// Edges among `cells` induced by the templates, as index pairs.
std::vector<std::pair<std::size_t, std::size_t>> induced_edges(std::span<const Cell> cells,
                                                               std::span<const EdgeTemplate> edges) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < cells.size(); ++u) {
    for (std::size_t v = 0; v < cells.size(); ++v) {
      if (cells[u].row >= cells[v].row) continue;
      for (const auto& e : edges) {
        if (e.low.row == cells[u].row && e.high.row == cells[v].row &&
            cells[v].dx - cells[u].dx == e.shift) {
          out.emplace_back(u, v);
        }
      }
    }
  }
  return out;
}

bool connected_spanning(std::size_t vertex_count, std::span<const std::pair<std::size_t, std::size_t>> edges,
                        unsigned subset) {
  std::vector<std::size_t> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = vertex_count;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!(subset & (1u << i))) continue;
    const auto a = find(edges[i].first);
    const auto b = find(edges[i].second);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<Cell> normalized(std::vector<Cell> cells) {
  int lo = cells.front().dx;
  for (const auto& c : cells) lo = std::min(lo, c.dx);
  for (auto& c : cells) c.dx -= lo;
  std::sort(cells.begin(), cells.end());
  return cells;
}

bool has_row(const std::vector<Cell>& cells, int row) {
  return std::any_of(cells.begin(), cells.end(), [row](const Cell& c) { return c.row == row; });
}

}  // namespace

int tile_coefficient(std::span<const Cell> cells, std::span<const EdgeTemplate> edges) {
  if (cells.size() < 2) return 1;
  const auto induced = induced_edges(cells, edges);
  if (induced.size() > 16) throw std::invalid_argument("tile has too many edges");
  int total = 0;
  for (unsigned subset = 1; subset < (1u << induced.size()); ++subset) {
    if (connected_spanning(cells.size(), induced, subset)) {
      total += (std::popcount(subset) % 2 == 0) ? 1 : -1;
    }
  }
  return total;
}

WeightTag assign_weight(std::span<const Cell> cells, int rows) {
  const bool touches_fixed_row =
      std::any_of(cells.begin(), cells.end(), [](const Cell& c) { return c.row == 0; });
  if (rows == 2) {
    if (cells.size() == 1) return cells[0].row == 0 ? WeightTag::Unit : WeightTag::X;
    return WeightTag::Unit;
  }
  if (cells.size() == 1) {
    switch (cells[0].row) {
      case 0: return WeightTag::Unit;
      case 1: return WeightTag::X2;
      default: return WeightTag::X3;
    }
  }
  return touches_fixed_row ? WeightTag::X1 : WeightTag::X23;
}

TileAlphabet enumerate_tiles(const ShiftSpec& spec) {
  const auto edges = build_edges(spec);
  std::set<std::vector<Cell>> found;
  std::vector<std::vector<Cell>> frontier;
  for (const auto& e : edges) {
    auto cells = normalized({e.low, e.high});
    if (found.insert(cells).second) frontier.push_back(std::move(cells));
  }
  // Grow each connected set by one edge at a time; one cell per row caps size.
  while (!frontier.empty()) {
    auto current = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& base : current) {
      for (const auto& e : edges) {
        Cell added;
        if (base.row == e.low.row && !has_row(current, e.high.row)) {
          added = Cell{base.dx + e.shift, e.high.row};
        } else if (base.row == e.high.row && !has_row(current, e.low.row)) {
          added = Cell{base.dx - e.shift, e.low.row};
        } else {
          continue;
        }
        auto grown = current;
        grown.push_back(added);
        grown = normalized(std::move(grown));
        if (found.insert(grown).second) frontier.push_back(std::move(grown));
      }
    }
  }

  TileAlphabet alphabet;
  alphabet.rows = spec.rows();
  for (int row = 0; row < spec.rows(); ++row) {
    const std::vector<Cell> single{Cell{0, row}};
    alphabet.tiles.push_back(Tile{single, 1, assign_weight(single, spec.rows())});
  }
  for (const auto& cells : found) {
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        if (cells[i].row == cells[j].row) throw std::logic_error("tile with two cells in one row");
      }
    }
    const int c = tile_coefficient(cells, edges);
    if (c == 0) continue;
    alphabet.tiles.push_back(Tile{cells, c, assign_weight(cells, spec.rows())});
  }
  return alphabet;
}

std::string dump_tiles(const TileAlphabet& alphabet) {
  std::ostringstream os;
  for (const auto& t : alphabet.tiles) {
    for (const auto& c : t.cells) os << '(' << c.dx << ',' << c.row << ") ";
    os << "coeff=" << t.coefficient << " weight=" << to_string(t.weight) << '\n';
  }
  return os.str();
}

}  // namespace glrect
