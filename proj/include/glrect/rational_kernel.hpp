#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "glrect/polynomial.hpp"

namespace glrect {

/// Ratio N(X)/D(X) of two polynomials in the series variable X whose
/// coefficients are polynomials over `coefficient_ring`. Entry i of each
/// vector is the coefficient of X^i.
class RationalKernel {
 public:
  RationalKernel(RingPtr coefficient_ring, std::vector<Polynomial> numerator,
                 std::vector<Polynomial> denominator);

  /// Splits bivariate polynomials whose ring's last variable is X.
  static RationalKernel from_series_ring(const Polynomial& numerator, const Polynomial& denominator);

  const RingPtr& coefficient_ring() const noexcept { return coefficient_ring_; }
  const std::vector<Polynomial>& numerator() const noexcept { return numerator_; }
  const std::vector<Polynomial>& denominator() const noexcept { return denominator_; }

  /// True once the integer content is removed and D(0) == 1.
  bool normalized() const noexcept { return normalized_; }

  /// Removes the common integer content and fixes the sign so D(0) is
  /// positive. Sets normalized() when D(0) becomes 1.
  void normalize();

  /// "(N) / (D)" with both sides written over coefficient variables plus X.
  std::string to_string() const;

 private:
  RingPtr coefficient_ring_;
  std::vector<Polynomial> numerator_;
  std::vector<Polynomial> denominator_;
  bool normalized_ = false;
};

/// Coefficients of X^0..X^n_max of the power series of the kernel, from the
/// recurrence D * C = N. Throws Error when D(0) is zero.
std::vector<Polynomial> series_expand(const RationalKernel& kernel, std::size_t n_max);

/// Splits a polynomial over (vars..., X) into coefficients of X^i over (vars...).
std::vector<Polynomial> split_series_variable(const Polynomial& p, const RingPtr& coefficient_ring);

/// Inverse of split_series_variable.
Polynomial join_series_variable(const std::vector<Polynomial>& coefficients, const RingPtr& series_ring);

/// Ring of `series_ring` with its last (series) variable removed.
RingPtr coefficient_ring_of(const RingPtr& series_ring);

}  // namespace glrect
