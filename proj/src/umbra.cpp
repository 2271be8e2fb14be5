#include "glrect/umbra.hpp"

#include <stdexcept>
#include <string>

#include "glrect/error.hpp"

namespace glrect {

FactorialTable::FactorialTable(unsigned max) : table_(max + 1) {
  table_[0] = 1;
  for (unsigned i = 1; i <= max; ++i) table_[i] = table_[i - 1] * i;
}

const BigInt& FactorialTable::factorial(long n) const {
  if (n < 0) throw std::out_of_range("factorial of negative number requested");
  if (static_cast<unsigned long>(n) >= table_.size()) {
    throw std::out_of_range("factorial table too small for " + std::to_string(n));
  }
  return table_[static_cast<std::size_t>(n)];
}

BigInt FactorialTable::binomial(long m, long j) const {
  if (m < 0 || j < 0 || j > m) return 0;
  BigInt out = factorial(m);
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), factorial(j).get_mpz_t());
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), factorial(m - j).get_mpz_t());
  return out;
}

BigInt FactorialTable::falling_ratio(long m, long j) const {
  if (j < 0 || j > m) throw std::out_of_range("falling_ratio needs 0 <= j <= m");
  BigInt out = factorial(m);
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), factorial(j).get_mpz_t());
  return out;
}

namespace {

void require_ring(const Polynomial& p, const RingPtr& ring, const char* what) {
  if (!same_ring(p.ring(), ring)) throw RingMismatch(std::string(what) + " expects another ring");
}

}  // namespace

BigInt umbral_eval_2row(const Polynomial& p, const FactorialTable& factorials) {
  require_ring(p, Ring::two_row(), "umbral_eval_2row");
  BigInt total = 0;
  for (const auto& t : p.terms()) total += t.coefficient * factorials.factorial(t.monomial.exponent(0));
  return total;
}

BigInt umbral_eval_3row(const Polynomial& p, unsigned n, const FactorialTable& factorials) {
  require_ring(p, Ring::three_row(), "umbral_eval_3row");
  BigInt total = 0;
  BigInt value;
  for (const auto& t : p.terms()) {
    const long a1 = t.monomial.exponent(0);
    const long a2 = t.monomial.exponent(1);
    const long a3 = t.monomial.exponent(2);
    const long a23 = t.monomial.exponent(3);
    const long open = static_cast<long>(n) - a1;
    if (a23 > open) continue;
    // C(open, a23) * a23! = open! / (open - a23)!
    value = factorials.falling_ratio(open, open - a23);
    value *= factorials.factorial(a2);
    value *= factorials.factorial(a3);
    total += t.coefficient * value;
  }
  return total;
}

BigInt umbral_eval_trapezoid(const Polynomial& p, unsigned n, const FactorialTable& factorials) {
  require_ring(p, Ring::three_row(), "umbral_eval_trapezoid");
  BigInt total = 0;
  BigInt value;
  for (const auto& t : p.terms()) {
    const long a1 = t.monomial.exponent(0);
    const long a2 = t.monomial.exponent(1);
    const long a3 = t.monomial.exponent(2);
    const long a23 = t.monomial.exponent(3);
    const long open = static_cast<long>(n) - a1;
    if (a23 > open) continue;
    value = factorials.falling_ratio(open, open - a23);
    value *= factorials.factorial(a2 + 1);
    value *= factorials.falling_ratio(a3 + 2, 2);
    total += t.coefficient * value;
  }
  return total;
}

BigInt umbral_eval(UmbralKind kind, const Polynomial& p, unsigned n, const FactorialTable& factorials) {
  switch (kind) {
    case UmbralKind::TwoRow: return umbral_eval_2row(p, factorials);
    case UmbralKind::ThreeRowRectangle: return umbral_eval_3row(p, n, factorials);
    case UmbralKind::ThreeRowTrapezoid: return umbral_eval_trapezoid(p, n, factorials);
  }
  throw std::logic_error("unknown umbral kind");
}

unsigned factorial_bound(UmbralKind kind, unsigned n) {
  return kind == UmbralKind::ThreeRowTrapezoid ? n + 2 : n;
}

}  // namespace glrect
