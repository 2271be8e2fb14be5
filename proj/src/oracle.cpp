#include "glrect/oracle.hpp"

#include <cstdint>
#include <string>
#include <utility>

#include "glrect/error.hpp"

namespace glrect::oracle {

std::string ArrayInstance::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) out += '/';
    for (std::size_t j = 0; j < rows[r].size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(rows[r][j]);
    }
  }
  return out;
}

namespace {

// Labels 1..labels go into a ragged array; two cells may not share a label
// when they are in the same row or when `conflicts` says so. Cells are filled
// in a fixed order and each new label is checked against every earlier cell
// it must differ from.
class Backtracker {
 public:
  template <typename Conflict>
  Backtracker(std::vector<int> lengths, int labels, bool fix_first_row, Conflict conflicts)
      : lengths_(std::move(lengths)), labels_(labels) {
    for (int r = 0; r < static_cast<int>(lengths_.size()); ++r) {
      for (int j = 0; j < lengths_[static_cast<std::size_t>(r)]; ++j) cells_.push_back({r, j});
    }
    fixed_ = fix_first_row && !lengths_.empty() ? lengths_.front() : 0;
    must_differ_.resize(cells_.size());
    for (std::size_t a = 0; a < cells_.size(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        const auto [rb, jb] = cells_[b];
        const auto [ra, ja] = cells_[a];
        if (ra == rb || conflicts(rb, jb, ra, ja)) must_differ_[a].push_back(b);
      }
    }
    value_.assign(cells_.size(), 0);
    for (int j = 0; j < fixed_; ++j) value_[static_cast<std::size_t>(j)] = j + 1;
  }

  std::uint64_t run(const Visitor& visit) {
    visit_ = &visit;
    count_ = 0;
    extend(static_cast<std::size_t>(fixed_));
    return count_;
  }

 private:
  void extend(std::size_t index) {
    if (index == cells_.size()) {
      ++count_;
      if (*visit_) (*visit_)(snapshot());
      return;
    }
    for (int label = 1; label <= labels_; ++label) {
      bool ok = true;
      for (std::size_t other : must_differ_[index]) {
        if (value_[other] == label) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      value_[index] = label;
      extend(index + 1);
    }
    value_[index] = 0;
  }

  ArrayInstance snapshot() const {
    ArrayInstance a;
    a.rows.resize(lengths_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      a.rows[static_cast<std::size_t>(cells_[i].first)].push_back(value_[i]);
    }
    return a;
  }

  std::vector<int> lengths_;
  int labels_;
  int fixed_ = 0;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<std::size_t>> must_differ_;
  std::vector<int> value_;
  const Visitor* visit_ = nullptr;
  std::uint64_t count_ = 0;
};

void check_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw OracleLimit(std::string(what) + ": n=" + std::to_string(n) + " outside the brute-force range [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

BigInt to_bigint(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

// Diagonal rule for triangles and trapezoids: position j of row `high`
// shares a line with positions j and j + (high - low) of row `low`.
bool shares_diagonal(int low_row, int low_pos, int high_row, int high_pos) {
  return low_pos == high_pos || low_pos == high_pos + (high_row - low_row);
}

}  // namespace

BigInt count_generalized_perms(const std::set<int>& shifts, int n, ShiftConvention convention,
                               const Visitor& visit) {
  check_range(n, 0, kMaxPermutationLength, "count_generalized_perms");
  // Row 0 holds i at column i-1; row 1 holds p(i). Row-0 cell j and row-1
  // cell j' carry the same label iff p(j'+1) = j+1, i.e. i - p(i) = j' - j.
  auto conflict = [&](int, int j, int, int jp) {
    const int d = jp - j;
    return shifts.count(convention == ShiftConvention::PositionMinusValue ? d : -d) > 0;
  };
  Backtracker search({n, n}, n, true, conflict);
  return to_bigint(search.run(visit));
}

BigInt count_glr3(const std::set<int>& s12, const std::set<int>& s13, const std::set<int>& s23, int n,
                  bool reduced, const Visitor& visit) {
  check_range(n, 0, kMaxRectangleLength, "count_glr3");
  auto conflict = [&](int low, int j, int high, int jp) {
    const std::set<int>& s = low == 0 ? (high == 1 ? s12 : s13) : s23;
    return s.count(jp - j) > 0;
  };
  Backtracker search({n, n, n}, n, reduced, conflict);
  return to_bigint(search.run(visit));
}

BigInt count_trapezoid3(int n, const Visitor& visit) {
  check_range(n, 3, kMaxTrapezoidBase, "count_trapezoid3");
  Backtracker search({n, n - 1, n - 2}, n, true, shares_diagonal);
  return to_bigint(search.run(visit));
}

BigInt count_latin_triangle(int n, const Visitor& visit) {
  check_range(n, 3, kMaxTriangleSide, "count_latin_triangle");
  std::vector<int> lengths;
  for (int len = n; len >= 1; --len) lengths.push_back(len);
  Backtracker search(lengths, n, true, shares_diagonal);
  return to_bigint(search.run(visit));
}

}  // namespace glrect::oracle
