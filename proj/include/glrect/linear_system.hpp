#pragma once

#include <vector>

#include "glrect/polynomial.hpp"
#include "glrect/rational_kernel.hpp"

namespace glrect {

/// Square system matrix * F = rhs over a polynomial ring whose last variable
/// is the series variable X.
struct LinearSystem {
  RingPtr ring;
  std::vector<std::vector<Polynomial>> matrix;
  std::vector<Polynomial> rhs;
};

/// Fraction-free (Bareiss) elimination followed by exact back substitution.
/// Every unknown comes back as a normalized kernel sharing the determinant as
/// denominator (up to content). Throws SingularSystem for det == 0.
std::vector<RationalKernel> solve_linear_system(const LinearSystem& system);

}  // namespace glrect
