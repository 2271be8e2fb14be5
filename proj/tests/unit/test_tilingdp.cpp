#include <doctest.h>

#include <random>

#include "direct_tiling.hpp"
#include "edge_subsets.hpp"
#include "glrect/tiling_dp.hpp"

using namespace glrect;

namespace {

Polynomial px(std::string_view text) { return Polynomial::parse(Ring::two_row(), text); }
Polynomial p3(std::string_view text) { return Polynomial::parse(Ring::three_row(), text); }

std::set<int> random_set(std::mt19937_64& rng, int lo, int hi) {
  std::set<int> s;
  for (int v = lo; v <= hi; ++v) {
    if (rng() % 3 == 0) s.insert(v);
  }
  return s;
}

ShiftSpec random_spec(std::mt19937_64& rng, int rows) {
  if (rows == 2) return ShiftSpec::two_row(random_set(rng, -3, 3));
  return ShiftSpec::three_row(random_set(rng, -2, 2), random_set(rng, -2, 2), random_set(rng, -2, 2));
}

std::vector<int> rect(int rows, int n) { return std::vector<int>(static_cast<std::size_t>(rows), n); }

}  // namespace

TEST_CASE("board shapes") {
  CHECK(BoardShape::rectangle(3).row_lengths(4) == std::vector<int>{4, 4, 4});
  CHECK(BoardShape::trapezoid3().row_lengths(5) == std::vector<int>{5, 4, 3});
  CHECK_THROWS(BoardShape::trapezoid3().row_lengths(2));
}

TEST_CASE("weight_series examples") {
  SUBCASE("S={0}: (x-1)^n") {
    const auto t = weight_series(enumerate_tiles(ShiftSpec::two_row({0})), BoardShape::rectangle(2), 8);
    REQUIRE(t.size() == 9);
    for (unsigned n = 0; n <= 8; ++n) CHECK(t[n] == px("x - 1").pow(n));
  }
  SUBCASE("S={}: x^n") {
    const auto t = weight_series(enumerate_tiles(ShiftSpec::two_row({})), BoardShape::rectangle(2), 3);
    CHECK(t[3] == px("x^3"));
  }
  SUBCASE("three rows, all {0}, one column") {
    const auto t = weight_series(enumerate_tiles(ShiftSpec::three_row({0}, {0}, {0})), BoardShape::rectangle(3), 1);
    CHECK(t[0] == p3("1"));
    CHECK(t[1] == p3("x2*x3 - x1*x3 - x1*x2 - x23 + 2*x1"));
  }
  SUBCASE("trapezoid entries below 3 are zero") {
    const auto spec = ShiftSpec::three_row({0, -1}, {0, -2}, {0, -1});
    const auto t = weight_series(enumerate_tiles(spec), BoardShape::trapezoid3(), 4);
    CHECK(t[0].is_zero());
    CHECK(t[2].is_zero());
    CHECK_FALSE(t[3].is_zero());
  }
}

TEST_CASE("profile_successors") {
  SUBCASE("empty profile, S={0}") {
    const auto a = enumerate_tiles(ShiftSpec::two_row({0}));
    const ScanContext ctx(a, rect(2, ScanContext::kUnbounded));
    const auto s = profile_successors(ctx.initial(), ctx, 0);
    REQUIRE(s.size() == 2);
    std::set<std::uint64_t> next;
    for (const auto& succ : s) {
      CHECK(succ.tile.has_value());
      next.insert(succ.next.occupied);
    }
    CHECK(next == std::set<std::uint64_t>{0b01, 0b11});
  }
  SUBCASE("full window advances") {
    const auto a = enumerate_tiles(ShiftSpec::two_row({1}));
    const ScanContext ctx(a, rect(2, ScanContext::kUnbounded));
    const auto s = profile_successors(Profile{0b1111}, ctx, 0);
    REQUIRE(s.size() == 1);
    CHECK_FALSE(s[0].tile.has_value());
    CHECK(s[0].next.occupied == 0b11);
  }
  SUBCASE("S={1}: diagonal pair reaches into the next column") {
    const auto a = enumerate_tiles(ShiftSpec::two_row({1}));
    const ScanContext ctx(a, rect(2, ScanContext::kUnbounded));
    bool found = false;
    for (const auto& succ : profile_successors(ctx.initial(), ctx, 0)) {
      if (a.tiles[*succ.tile].cells.size() == 2) {
        CHECK(succ.next.occupied == ((1u << 0) | (1u << 3)));
        found = true;
      }
    }
    CHECK(found);
  }
  SUBCASE("successors are duplicate free") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = enumerate_tiles(random_spec(rng, 3));
      const ScanContext ctx(a, rect(3, ScanContext::kUnbounded));
      const auto s = profile_successors(ctx.initial(), ctx, 0);
      std::set<std::pair<std::uint64_t, std::size_t>> seen;
      for (const auto& succ : s) CHECK(seen.insert({succ.next.occupied, *succ.tile}).second);
    }
  }
}

TEST_CASE("DP agrees with the edge-subset oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 16; ++trial) {
    const int rows = trial % 2 == 0 ? 2 : 3;
    const auto spec = random_spec(rng, rows);
    const auto a = enumerate_tiles(spec);
    const int max_n = rows == 2 ? 6 : 3;
    const auto table = weight_series(a, BoardShape::rectangle(rows), static_cast<unsigned>(max_n));
    for (int n = 0; n <= max_n; ++n) {
      CAPTURE(spec.to_string());
      CAPTURE(n);
      CHECK(table[static_cast<std::size_t>(n)] == testsupport::edge_subset_polynomial(spec, rect(rows, n)));
    }
  }
}

TEST_CASE("trapezoid DP agrees with the edge-subset oracle") {
  const auto spec = ShiftSpec::three_row({0, -1}, {0, -2}, {0, -1});
  const auto table = weight_series(enumerate_tiles(spec), BoardShape::trapezoid3(), 4);
  for (int n = 3; n <= 4; ++n) {
    CHECK(table[static_cast<std::size_t>(n)] ==
          testsupport::edge_subset_polynomial(spec, BoardShape::trapezoid3().row_lengths(n)));
  }
}

TEST_CASE("DP agrees with direct tiling enumeration") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const int rows = trial % 2 == 0 ? 2 : 3;
    const auto a = enumerate_tiles(random_spec(rng, rows));
    for (int n = 0; n <= 5; ++n) {
      const auto lengths = rect(rows, n);
      const auto direct = testsupport::direct_tilings(a, lengths);
      const Polynomial p = board_polynomial(a, lengths);
      CHECK(p == direct.polynomial);
    }
  }
}

TEST_CASE("unit weights count tilings") {
  // Replacing every weight and coefficient by 1 gives the number of tilings.
  const auto a = enumerate_tiles(ShiftSpec::three_row({-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}));
  TileAlphabet ones = a;
  for (auto& t : ones.tiles) {
    t.coefficient = 1;
    t.weight = WeightTag::Unit;
  }
  for (int n = 1; n <= 4; ++n) {
    const auto direct = testsupport::direct_tilings(a, rect(3, n));
    CHECK(board_polynomial(ones, rect(3, n)).coefficient_sum() == BigInt(static_cast<long>(direct.count)));
  }
}

TEST_CASE("mirror symmetry of weight series") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const int rows = trial % 2 == 0 ? 2 : 3;
    const auto spec = random_spec(rng, rows);
    const auto a = weight_series(enumerate_tiles(spec), BoardShape::rectangle(rows), 7);
    const auto b = weight_series(enumerate_tiles(spec.negated()), BoardShape::rectangle(rows), 7);
    CHECK(a == b);
  }
}

TEST_CASE("sweep and per-board computation agree") {
  const auto a = enumerate_tiles(ShiftSpec::three_row({0, 1}, {-1}, {0, 2}));
  const auto table = weight_series(a, BoardShape::rectangle(3), 6);
  for (int n = 0; n <= 6; ++n) CHECK(table[static_cast<std::size_t>(n)] == board_polynomial(a, rect(3, n)));
}

TEST_CASE("parallel trapezoid series equals sequential") {
  const auto a = enumerate_tiles(ShiftSpec::three_row({0, -1}, {0, -2}, {0, -1}));
  CHECK(weight_series(a, BoardShape::trapezoid3(), 9, 1) == weight_series(a, BoardShape::trapezoid3(), 9, 3));
}

TEST_CASE("kernel2 examples") {
  CHECK(kernel2({}).to_string() == "(1) / (1 - 1*x^1*X^1)");
  CHECK(kernel2({0}).to_string() == "(1) / (1 + 1*X^1 - 1*x^1*X^1)");
  const auto k = kernel2({0, 1, -2});
  CHECK(k.normalized());
  const auto s = series_expand(k, 12);
  const auto a = enumerate_tiles(ShiftSpec::two_row({0, 1, -2}));
  CHECK(s == weight_series(a, BoardShape::rectangle(2), 12));
}

TEST_CASE("kernel2 agrees with the edge-subset oracle for S={0,1}") {
  const auto s = series_expand(kernel2({0, 1}), 6);
  for (int n = 0; n <= 6; ++n) {
    CHECK(s[static_cast<std::size_t>(n)] == testsupport::edge_subset_polynomial(ShiftSpec::two_row({0, 1}), rect(2, n)));
  }
}

TEST_CASE("kernel2 series equals weight_series for random sets up to n=30") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const auto shifts = random_set(rng, -3, 3);
    const auto s = series_expand(kernel2(shifts), 30);
    const auto w = weight_series(enumerate_tiles(ShiftSpec::two_row(shifts)), BoardShape::rectangle(2), 30);
    CAPTURE(ShiftSpec::two_row(shifts).to_string());
    CHECK(s == w);
  }
}

TEST_CASE("transfer system starts at the empty profile") {
  const auto sys = transfer_system(enumerate_tiles(ShiftSpec::two_row({0, 1, -2})));
  REQUIRE_FALSE(sys.states.empty());
  CHECK(sys.states[0].occupied == 0);
  CHECK(sys.transfer.size() == sys.states.size());
}
