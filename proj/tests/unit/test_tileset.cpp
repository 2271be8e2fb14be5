#include <doctest.h>

#include <algorithm>
#include <random>

#include "glrect/tileset.hpp"

using namespace glrect;

namespace {

std::vector<std::vector<Cell>> cell_sets(const TileAlphabet& a) {
  std::vector<std::vector<Cell>> out;
  for (const auto& t : a.tiles) out.push_back(t.cells);
  std::sort(out.begin(), out.end());
  return out;
}

const Tile* find_tile(const TileAlphabet& a, std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  for (const auto& t : a.tiles) {
    if (t.cells == cells) return &t;
  }
  return nullptr;
}

std::set<int> random_set(std::mt19937_64& rng, int lo, int hi) {
  std::set<int> s;
  for (int v = lo; v <= hi; ++v) {
    if (rng() % 3 == 0) s.insert(v);
  }
  return s;
}

}  // namespace

TEST_CASE("shift spec validation") {
  const auto spec = ShiftSpec::three_row({0}, {1}, {-1});
  CHECK(spec.rows() == 3);
  CHECK(spec.shifts(0, 2) == std::set<int>{1});
  CHECK_THROWS(spec.shifts(1, 0));
  CHECK_THROWS(ShiftSpec::two_row({0}).shifts(1, 2));
  CHECK(spec.negated().shifts(1, 2) == std::set<int>{1});
  CHECK(spec.negated().negated() == spec);
}

TEST_CASE("build_edges") {
  SUBCASE("two rows, S={0}") {
    const auto e = build_edges(ShiftSpec::two_row({0}));
    REQUIRE(e.size() == 1);
    CHECK(e[0].low == Cell{0, 0});
    CHECK(e[0].high == Cell{0, 1});
  }
  SUBCASE("three rows, only S12={0}") {
    const auto e = build_edges(ShiftSpec::three_row({0}, {}, {}));
    REQUIRE(e.size() == 1);
    CHECK(e[0].high == Cell{0, 1});
  }
  SUBCASE("two rows, S={0,1,-2}") {
    const auto e = build_edges(ShiftSpec::two_row({0, 1, -2}));
    std::set<std::pair<int, int>> highs;
    for (const auto& edge : e) {
      CHECK(edge.low == Cell{0, 0});
      CHECK(edge.high.dx == edge.shift);
      highs.insert({edge.high.dx, edge.high.row});
    }
    CHECK(highs == std::set<std::pair<int, int>>{{0, 1}, {1, 1}, {-2, 1}});
  }
  SUBCASE("S23 edges start on row 1") {
    const auto e = build_edges(ShiftSpec::three_row({}, {}, {2}));
    REQUIRE(e.size() == 1);
    CHECK(e[0].low == Cell{0, 1});
    CHECK(e[0].high == Cell{2, 2});
  }
}

TEST_CASE("enumerate_tiles: all three sets {0}") {
  const auto a = enumerate_tiles(ShiftSpec::three_row({0}, {0}, {0}));
  REQUIRE(a.tiles.size() == 7);
  int singles = 0;
  int pairs = 0;
  for (const auto& t : a.tiles) {
    if (t.cells.size() == 1) ++singles;
    if (t.cells.size() == 2) {
      ++pairs;
      CHECK(t.coefficient == -1);
      CHECK(t.width() == 1);
    }
  }
  CHECK(singles == 3);
  CHECK(pairs == 3);
  const Tile* tri = find_tile(a, {{0, 0}, {0, 1}, {0, 2}});
  REQUIRE(tri != nullptr);
  CHECK(tri->coefficient == 2);
  CHECK(tri->weight == WeightTag::X1);
}

TEST_CASE("enumerate_tiles: empty set gives singletons") {
  const auto a = enumerate_tiles(ShiftSpec::two_row({}));
  CHECK(cell_sets(a) == std::vector<std::vector<Cell>>{{{0, 0}}, {{0, 1}}});
}

TEST_CASE("enumerate_tiles: path tile") {
  const auto a = enumerate_tiles(ShiftSpec::three_row({0}, {}, {1}));
  CHECK(a.tiles.size() == 6);
  REQUIRE(find_tile(a, {{0, 0}, {0, 1}}) != nullptr);
  const Tile* pair23 = find_tile(a, {{0, 1}, {1, 2}});
  REQUIRE(pair23 != nullptr);
  CHECK(pair23->weight == WeightTag::X23);
  CHECK(pair23->coefficient == -1);
  const Tile* path = find_tile(a, {{0, 0}, {0, 1}, {1, 2}});
  REQUIRE(path != nullptr);
  CHECK(path->coefficient == 1);
  CHECK(path->weight == WeightTag::X1);
  CHECK(path->width() == 2);
}

TEST_CASE("tile_coefficient") {
  const auto edges = build_edges(ShiftSpec::three_row({0}, {0}, {0}));
  const std::vector<Cell> pair{{0, 0}, {0, 1}};
  const std::vector<Cell> triangle{{0, 0}, {0, 1}, {0, 2}};
  CHECK(tile_coefficient(pair, edges) == -1);
  CHECK(tile_coefficient(triangle, edges) == 2);
  const auto path_edges = build_edges(ShiftSpec::three_row({0}, {}, {0}));
  CHECK(tile_coefficient(triangle, path_edges) == 1);
  const std::vector<Cell> single{{0, 2}};
  CHECK(tile_coefficient(single, edges) == 1);
}

TEST_CASE("assign_weight") {
  const std::vector<Cell> r0{{0, 0}};
  const std::vector<Cell> r1{{0, 1}};
  const std::vector<Cell> r2{{0, 2}};
  const std::vector<Cell> p01{{0, 0}, {3, 1}};
  const std::vector<Cell> p12{{0, 1}, {0, 2}};
  CHECK(assign_weight(r0, 2) == WeightTag::Unit);
  CHECK(assign_weight(r1, 2) == WeightTag::X);
  CHECK(assign_weight(p01, 2) == WeightTag::Unit);
  CHECK(assign_weight(r0, 3) == WeightTag::Unit);
  CHECK(assign_weight(r1, 3) == WeightTag::X2);
  CHECK(assign_weight(r2, 3) == WeightTag::X3);
  CHECK(assign_weight(p01, 3) == WeightTag::X1);
  CHECK(assign_weight(p12, 3) == WeightTag::X23);
}

TEST_CASE("two-row pair tiles always have coefficient -1") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = enumerate_tiles(ShiftSpec::two_row(random_set(rng, -4, 4)));
    for (const auto& t : a.tiles) {
      CHECK(t.cells.size() <= 2);
      if (t.cells.size() == 2) CHECK(t.coefficient == -1);
    }
  }
}

TEST_CASE("tiles have at most one cell per row and min dx 0") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto spec = ShiftSpec::three_row(random_set(rng, -2, 2), random_set(rng, -2, 2), random_set(rng, -2, 2));
    for (const auto& t : enumerate_tiles(spec).tiles) {
      std::set<int> rows;
      int min_dx = t.cells.front().dx;
      for (const auto& c : t.cells) {
        rows.insert(c.row);
        min_dx = std::min(min_dx, c.dx);
      }
      CHECK(rows.size() == t.cells.size());
      CHECK(min_dx == 0);
      CHECK(t.coefficient != 0);
    }
  }
}

TEST_CASE("negated shifts give the mirror alphabet") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto spec = ShiftSpec::three_row(random_set(rng, -2, 2), random_set(rng, -2, 2), random_set(rng, -2, 2));
    const auto a = enumerate_tiles(spec);
    const auto b = enumerate_tiles(spec.negated());
    REQUIRE(a.tiles.size() == b.tiles.size());
    for (const auto& t : a.tiles) {
      std::vector<Cell> mirrored;
      for (const auto& c : t.cells) mirrored.push_back({t.width() - 1 - c.dx, c.row});
      const Tile* m = find_tile(b, mirrored);
      REQUIRE(m != nullptr);
      CHECK(m->coefficient == t.coefficient);
      CHECK(m->weight == t.weight);
    }
  }
}

TEST_CASE("dump_tiles golden") {
  const auto a = enumerate_tiles(ShiftSpec::two_row({0}));
  CHECK(dump_tiles(a) ==
        "(0,0) coeff=1 weight=1\n"
        "(0,1) coeff=1 weight=x\n"
        "(0,0) (0,1) coeff=-1 weight=1\n");
  const auto b = enumerate_tiles(ShiftSpec::three_row({0}, {}, {1}));
  CHECK(dump_tiles(b) ==
        "(0,0) coeff=1 weight=1\n"
        "(0,1) coeff=1 weight=x2\n"
        "(0,2) coeff=1 weight=x3\n"
        "(0,0) (0,1) coeff=-1 weight=x1\n"
        "(0,0) (0,1) (1,2) coeff=1 weight=x1\n"
        "(0,1) (1,2) coeff=-1 weight=x23\n");
}
