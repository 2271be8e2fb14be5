#include "glrect/linear_system.hpp"

#include <stdexcept>
#include <utility>

#include "glrect/error.hpp"

namespace glrect {

std::vector<RationalKernel> solve_linear_system(const LinearSystem& system) {
  const std::size_t n = system.matrix.size();
  if (system.rhs.size() != n) throw std::invalid_argument("rhs length differs from matrix size");
  for (const auto& row : system.matrix) {
    if (row.size() != n) throw std::invalid_argument("system matrix is not square");
  }
  if (n == 0) return {};

  auto a = system.matrix;
  auto b = system.rhs;
  const RingPtr& ring = system.ring;
  Polynomial previous = Polynomial::constant(ring, 1);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    // Prefer the sparsest nonzero pivot; it keeps the Bareiss products small.
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      if (a[pivot][k].is_zero() || a[i][k].size() < a[pivot][k].size()) pivot = i;
    }
    if (a[pivot][k].is_zero()) throw SingularSystem("linear system is singular");
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      std::swap(b[pivot], b[k]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divide_exact(previous);
      }
      b[i] = (a[k][k] * b[i] - a[i][k] * b[k]).divide_exact(previous);
      a[i][k] = Polynomial(ring);
    }
    previous = a[k][k];
  }

  // previous == +-det; scaled[i] = det * F_i is a polynomial by Cramer's rule.
  const Polynomial& det = previous;
  std::vector<Polynomial> scaled(n, Polynomial(ring));
  for (std::size_t ii = n; ii-- > 0;) {
    Polynomial acc = det * b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) {
      if (!a[ii][j].is_zero()) acc -= a[ii][j] * scaled[j];
    }
    scaled[ii] = acc.divide_exact(a[ii][ii]);
  }

  std::vector<RationalKernel> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto kernel = RationalKernel::from_series_ring(scaled[i], det);
    kernel.normalize();
    out.push_back(std::move(kernel));
  }
  return out;
}

}  // namespace glrect
