#pragma once

#include <vector>

#include "glrect/bigint.hpp"
#include "glrect/polynomial.hpp"

namespace glrect {

enum class UmbralKind { TwoRow, ThreeRowRectangle, ThreeRowTrapezoid };

/// Exact factorials 0!..max! and binomials built from them.
class FactorialTable {
 public:
  explicit FactorialTable(unsigned max);

  unsigned max() const noexcept { return static_cast<unsigned>(table_.size() - 1); }
  /// Throws std::out_of_range for negative or too-large arguments.
  const BigInt& factorial(long n) const;
  /// C(m, j); zero when j < 0, m < 0 or j > m.
  BigInt binomial(long m, long j) const;
  /// m! / j! for 0 <= j <= m.
  BigInt falling_ratio(long m, long j) const;

 private:
  std::vector<BigInt> table_;
};

/// x^k -> k!
BigInt umbral_eval_2row(const Polynomial& p, const FactorialTable& factorials);

/// x1^a1 x2^a2 x3^a3 x23^a23 -> C(n-a1, a23) a23! a2! a3!
BigInt umbral_eval_3row(const Polynomial& p, unsigned n, const FactorialTable& factorials);

/// Trapezoid rows have n, n-1, n-2 cells. With a1 labels committed by tiles
/// through the fixed row, the a23 joint labels are chosen as in the
/// rectangle; the a2 free middle cells then pick injectively from the a2+1
/// labels still open to that row, and the a3 free top cells from a3+2:
///   -> C(n-a1, a23) a23! (a2+1)! (a3+2)!/2
BigInt umbral_eval_trapezoid(const Polynomial& p, unsigned n, const FactorialTable& factorials);

/// Dispatches on kind; n is ignored for TwoRow.
BigInt umbral_eval(UmbralKind kind, const Polynomial& p, unsigned n, const FactorialTable& factorials);

/// Largest factorial argument umbral_eval may request for board length n.
unsigned factorial_bound(UmbralKind kind, unsigned n);

}  // namespace glrect
