#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glrect/bigint.hpp"

namespace glrect {

/// Ordered list of variable names. Polynomials may only be combined when
/// their rings compare equal.
class Ring {
 public:
  static constexpr std::size_t kMaxVariables = 4;

  explicit Ring(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Ring&) const = default;

  static std::shared_ptr<const Ring> make(std::vector<std::string> names);

  /// (x): two-row problems.
  static const std::shared_ptr<const Ring>& two_row();
  /// (x1, x2, x3, x23): three-row problems.
  static const std::shared_ptr<const Ring>& three_row();
  /// (x, X): two-row weight variable plus the series variable.
  static const std::shared_ptr<const Ring>& kernel();

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector packed into 16-bit fields, first variable most
/// significant, so integer order on the packed word is lexicographic order
/// on exponent vectors.
class Monomial {
 public:
  static constexpr unsigned kBits = 16;
  static constexpr unsigned kMaxExponent = (1u << kBits) - 1;

  constexpr Monomial() = default;

  static Monomial variable(std::size_t index, unsigned exponent = 1);
  static Monomial from_exponents(std::span<const unsigned> exponents);

  unsigned exponent(std::size_t index) const noexcept {
    return static_cast<unsigned>((packed_ >> shift(index)) & kMaxExponent);
  }
  unsigned total_degree() const noexcept;
  bool is_one() const noexcept { return packed_ == 0; }
  bool divides(Monomial other) const noexcept;

  /// Throws std::overflow_error if an exponent leaves its field.
  Monomial operator*(Monomial other) const;
  /// Requires divides(*this, other).
  Monomial operator/(Monomial other) const;

  /// Same monomial with one variable's exponent set to zero.
  Monomial without(std::size_t index) const noexcept;

  std::uint64_t packed() const noexcept { return packed_; }

  auto operator<=>(const Monomial&) const = default;

 private:
  static constexpr unsigned shift(std::size_t index) noexcept {
    return kBits * static_cast<unsigned>(Ring::kMaxVariables - 1 - index);
  }

  std::uint64_t packed_ = 0;
};

struct Term {
  Monomial monomial;
  BigInt coefficient;
};

/// Sparse polynomial with exact integer coefficients. Terms are kept in
/// ascending monomial order with no zero coefficients, so equality is
/// structural.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const BigInt& value);
  static Polynomial monomial(RingPtr ring, Monomial m, const BigInt& coefficient = 1);
  static Polynomial variable(RingPtr ring, std::string_view name);
  /// Sorts and combines arbitrary terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  /// Parses the canonical text form; also accepts implicit coefficients and
  /// exponents ("x^2 - 2*x + 1").
  static Polynomial parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  BigInt coefficient(Monomial m) const;
  /// Value with every variable set to 1.
  BigInt coefficient_sum() const;
  unsigned degree(std::size_t variable) const noexcept;
  /// Largest term in lex order; requires !is_zero().
  const Term& leading_term() const { return terms_.back(); }

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial operator-() const;

  /// factor * shift * (*this)
  Polynomial scaled(const BigInt& factor, Monomial shift = {}) const;
  Polynomial pow(unsigned exponent) const;

  /// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
  BigInt content() const;
  Polynomial divide_exact(const BigInt& divisor) const;
  /// Multivariate division in lex order; throws Error unless it is exact.
  Polynomial divide_exact(const Polynomial& divisor) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  struct ScaledRef {
    const Polynomial* source;
    long factor;
    Monomial shift;
  };
  /// Sum of factor * shift * source over all parts via one k-way merge.
  /// All sources must share `ring`.
  static Polynomial linear_combination(RingPtr ring, std::span<const ScaledRef> parts);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

}  // namespace glrect
