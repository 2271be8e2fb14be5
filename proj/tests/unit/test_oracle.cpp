#include <doctest.h>

#include <random>

#include "glrect/error.hpp"
#include "glrect/oracle.hpp"

using namespace glrect;
using namespace glrect::oracle;

namespace {

std::set<int> negate(const std::set<int>& s) {
  std::set<int> out;
  for (int v : s) out.insert(-v);
  return out;
}

std::vector<std::vector<int>> parse_rows(const std::string& text) {
  std::vector<std::vector<int>> rows(1);
  for (char c : text) {
    if (c == '/') rows.emplace_back();
  }
  std::size_t r = 0;
  std::string cur;
  for (char c : text + "/") {
    if (c == '/' || c == ' ') {
      if (!cur.empty()) rows[r].push_back(std::stoi(cur));
      cur.clear();
      if (c == '/') ++r;
    } else {
      cur += c;
    }
  }
  return rows;
}

// Independent legality check for triangle/trapezoid shaped arrays: rows
// distinct, and position j of row r differs from positions j and j+(r-r') of
// every lower row r'.
bool legal_staircase(const std::vector<std::vector<int>>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t j = 0; j < rows[r].size(); ++j) {
      for (std::size_t k = j + 1; k < rows[r].size(); ++k) {
        if (rows[r][j] == rows[r][k]) return false;
      }
      for (std::size_t lo = 0; lo < r; ++lo) {
        const std::size_t d = r - lo;
        if (rows[lo][j] == rows[r][j]) return false;
        if (j + d < rows[lo].size() && rows[lo][j + d] == rows[r][j]) return false;
      }
    }
  }
  return true;
}

std::set<int> random_set(std::mt19937_64& rng, int lo, int hi) {
  std::set<int> s;
  for (int v = lo; v <= hi; ++v) {
    if (rng() % 3 == 0) s.insert(v);
  }
  return s;
}

}  // namespace

TEST_CASE("generalized permutations") {
  CHECK(count_generalized_perms({0}, 4) == 9);
  CHECK(count_generalized_perms({}, 4) == 24);
  CHECK(count_generalized_perms({0, 1}, 5) == 16);
  CHECK(count_generalized_perms({0, 1}, 6) == 96);
  CHECK(count_generalized_perms({0}, 0) == 1);
}

TEST_CASE("sign conventions") {
  // Every listed permutation must respect its own convention, and the two
  // conventions select different permutations.
  std::vector<std::string> a;
  count_generalized_perms({1}, 3, ShiftConvention::PositionMinusValue,
                          [&](const ArrayInstance& inst) { a.push_back(inst.to_string()); });
  for (const auto& s : a) {
    const auto rows = parse_rows(s);
    for (int i = 1; i <= 3; ++i) CHECK(i - rows[1][static_cast<std::size_t>(i - 1)] != 1);
  }
  std::vector<std::string> b;
  count_generalized_perms({1}, 3, ShiftConvention::ValueMinusPosition,
                          [&](const ArrayInstance& inst) { b.push_back(inst.to_string()); });
  for (const auto& s : b) {
    const auto rows = parse_rows(s);
    for (int i = 1; i <= 3; ++i) CHECK(rows[1][static_cast<std::size_t>(i - 1)] - i != 1);
  }
  CHECK(a.size() == b.size());
  CHECK(a != b);
}

TEST_CASE("S and -S give the same counts") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const auto s = random_set(rng, -3, 3);
    for (int n = 1; n <= 7; ++n) CHECK(count_generalized_perms(s, n) == count_generalized_perms(negate(s), n));
  }
}

TEST_CASE("three-row rectangles") {
  CHECK(count_glr3({0}, {0}, {0}, 3) == 2);
  CHECK(count_glr3({}, {}, {}, 3) == 36);
  CHECK(count_glr3({0}, {0}, {0}, 4) == 24);
  CHECK(count_glr3({0}, {0}, {0}, 5) == 552);
}

TEST_CASE("reduction factor n!") {
  const std::set<int> s12{0, 1};
  const std::set<int> s13{-1};
  const std::set<int> s23{0};
  BigInt factorial = 1;
  for (int n = 1; n <= 5; ++n) {
    factorial *= n;
    CHECK(count_glr3(s12, s13, s23, n, false) == factorial * count_glr3(s12, s13, s23, n, true));
  }
}

TEST_CASE("trapezoids") {
  CHECK(count_trapezoid3(3) == 1);
  CHECK(count_trapezoid3(4) == 6);
  CHECK(count_trapezoid3(6) == 1670);
  CHECK(legal_staircase(parse_rows("1 2 3 4 5 6 7 8 9/8 1 9 2 7 3 4 6/6 3 7 8 2 5 1")));
  std::vector<std::string> all;
  count_trapezoid3(4, [&](const ArrayInstance& a) { all.push_back(a.to_string()); });
  CHECK(all.size() == 6);
  for (const auto& s : all) CHECK(legal_staircase(parse_rows(s)));
}

TEST_CASE("Latin triangles") {
  CHECK(count_latin_triangle(3) == 1);
  CHECK(count_latin_triangle(4) == 0);
  CHECK(count_latin_triangle(6) == 236);
}

TEST_CASE("side-5 triangles are exactly the four displayed ones") {
  std::set<std::string> found;
  const BigInt count =
      count_latin_triangle(5, [&](const ArrayInstance& a) { found.insert(a.to_string()); });
  const std::set<std::string> displayed{
      "1 2 3 4 5/5 1 2 3/4 5 1/3 4/2",
      "1 2 3 4 5/4 5 1 2/2 3 4/5 1/3",
      "1 2 3 4 5/4 1 5 2/5 3 1/2 4/3",
      "1 2 3 4 5/3 4 5 1/5 1 2/2 3/4",
  };
  CHECK(count == 4);
  CHECK(found == displayed);
  for (const auto& s : displayed) CHECK(legal_staircase(parse_rows(s)));
}

TEST_CASE("limits are enforced") {
  CHECK_THROWS_AS(count_generalized_perms({0}, kMaxPermutationLength + 1), OracleLimit);
  CHECK_THROWS_AS(count_generalized_perms({0}, -1), OracleLimit);
  CHECK_THROWS_AS(count_glr3({0}, {0}, {0}, kMaxRectangleLength + 1), OracleLimit);
  CHECK_THROWS_AS(count_trapezoid3(2), OracleLimit);
  CHECK_THROWS_AS(count_trapezoid3(kMaxTrapezoidBase + 1), OracleLimit);
  CHECK_THROWS_AS(count_latin_triangle(kMaxTriangleSide + 1), OracleLimit);
}

TEST_CASE("instance text form") {
  ArrayInstance a{{{1, 2, 3}, {3, 1}, {2}}};
  CHECK(a.to_string() == "1 2 3/3 1/2");
}
