#pragma once

#include <stdexcept>
#include <string>

namespace glrect {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary operation on polynomials from different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// The linear solver met a matrix with zero determinant.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// A brute-force counter was asked for a size beyond its hard limit.
class OracleLimit : public Error {
 public:
  using Error::Error;
};

/// Engine and brute-force oracle disagree; carries the diagnostic dump.
class OracleMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace glrect
