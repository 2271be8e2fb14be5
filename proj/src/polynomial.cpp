#include "glrect/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "glrect/error.hpp"

namespace glrect {

// ---------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVariables) {
    throw std::invalid_argument("ring has too many variables");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::shared_ptr<const Ring> Ring::make(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

const std::shared_ptr<const Ring>& Ring::two_row() {
  static const auto ring = make({"x"});
  return ring;
}

const std::shared_ptr<const Ring>& Ring::three_row() {
  static const auto ring = make({"x1", "x2", "x3", "x23"});
  return ring;
}

const std::shared_ptr<const Ring>& Ring::kernel() {
  static const auto ring = make({"x", "X"});
  return ring;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch("polynomials belong to different rings");
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
  if (index >= Ring::kMaxVariables) throw std::out_of_range("variable index");
  if (exponent > kMaxExponent) throw std::overflow_error("exponent too large");
  Monomial m;
  m.packed_ = std::uint64_t{exponent} << shift(index);
  return m;
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  if (exponents.size() > Ring::kMaxVariables) throw std::out_of_range("too many exponents");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > kMaxExponent) throw std::overflow_error("exponent too large");
    m.packed_ |= std::uint64_t{exponents[i]} << shift(i);
  }
  return m;
}

unsigned Monomial::total_degree() const noexcept {
  unsigned total = 0;
  for (std::size_t i = 0; i < Ring::kMaxVariables; ++i) total += exponent(i);
  return total;
}

bool Monomial::divides(Monomial other) const noexcept {
  for (std::size_t i = 0; i < Ring::kMaxVariables; ++i) {
    if (exponent(i) > other.exponent(i)) return false;
  }
  return true;
}

Monomial Monomial::operator*(Monomial other) const {
  constexpr std::uint64_t kCarryBits = 0x0001000100010000ull;
  Monomial m;
  m.packed_ = packed_ + other.packed_;
  // A carry out of field i flips the low bit of field i+1 (or wraps the word).
  if (((packed_ ^ other.packed_ ^ m.packed_) & kCarryBits) != 0 || m.packed_ < packed_) {
    throw std::overflow_error("monomial exponent overflow");
  }
  return m;
}

Monomial Monomial::operator/(Monomial other) const {
  if (!other.divides(*this)) throw std::domain_error("monomial does not divide");
  Monomial m;
  m.packed_ = packed_ - other.packed_;
  return m;
}

Monomial Monomial::without(std::size_t index) const noexcept {
  Monomial m;
  m.packed_ = packed_ & ~(std::uint64_t{kMaxExponent} << shift(index));
  return m;
}

// ---------------------------------------------------------------- helpers

namespace {

bool term_less(const Term& a, const Term& b) { return a.monomial < b.monomial; }

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial < b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial < a[i].monomial) {
      out.push_back(Term{b[j].monomial, sign_b < 0 ? BigInt(-b[j].coefficient) : b[j].coefficient});
      ++j;
    } else {
      BigInt c = sign_b < 0 ? BigInt(a[i].coefficient - b[j].coefficient)
                            : BigInt(a[i].coefficient + b[j].coefficient);
      if (c != 0) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Term> combine_sorted(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), term_less);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient == 0) out.pop_back();
  return out;
}

// Product of a[lo, hi) with b, by recursive halving of a and merging.
std::vector<Term> multiply_range(const std::vector<Term>& a, std::size_t lo, std::size_t hi,
                                 const std::vector<Term>& b) {
  if (hi - lo == 1) {
    std::vector<Term> out;
    out.reserve(b.size());
    for (const auto& t : b) {
      out.push_back(Term{a[lo].monomial * t.monomial, a[lo].coefficient * t.coefficient});
    }
    return out;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return merge_terms(multiply_range(a, lo, mid, b), multiply_range(a, mid, hi, b), +1);
}

}  // namespace

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial needs a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, const BigInt& value) {
  return monomial(std::move(ring), Monomial{}, value);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const BigInt& coefficient) {
  Polynomial p(std::move(ring));
  if (coefficient != 0) p.terms_.push_back(Term{m, coefficient});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  const auto index = ring->index_of(name);
  if (!index) throw std::invalid_argument("unknown variable: " + std::string(name));
  return monomial(std::move(ring), Monomial::variable(*index));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  return Polynomial(std::move(ring), combine_sorted(std::move(terms)));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

BigInt Polynomial::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

BigInt Polynomial::coefficient_sum() const {
  BigInt sum = 0;
  for (const auto& t : terms_) sum += t.coefficient;
  return sum;
}

unsigned Polynomial::degree(std::size_t variable) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(variable));
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = poly_mul(*this, other);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Polynomial Polynomial::scaled(const BigInt& factor, Monomial shift) const {
  Polynomial out(ring_);
  if (factor == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.terms_.push_back(Term{t.monomial * shift, t.coefficient * factor});
  }
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = poly_mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = poly_mul(base, base);
  }
  return result;
}

BigInt Polynomial::content() const {
  BigInt g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::divide_exact(const BigInt& divisor) const {
  if (divisor == 0) throw std::domain_error("division by zero");
  Polynomial out(*this);
  for (auto& t : out.terms_) {
    if (!mpz_divisible_p(t.coefficient.get_mpz_t(), divisor.get_mpz_t())) {
      throw Error("inexact division of polynomial by integer");
    }
    mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), divisor.get_mpz_t());
  }
  return out;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  require_same_ring(ring_, divisor.ring_);
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (divisor.is_constant()) return divide_exact(divisor.terms_[0].coefficient);

  const Term& lead = divisor.leading_term();
  Polynomial remainder = *this;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& top = remainder.leading_term();
    if (!lead.monomial.divides(top.monomial) ||
        !mpz_divisible_p(top.coefficient.get_mpz_t(), lead.coefficient.get_mpz_t())) {
      throw Error("inexact polynomial division");
    }
    Term q{top.monomial / lead.monomial, 0};
    mpz_divexact(q.coefficient.get_mpz_t(), top.coefficient.get_mpz_t(),
                 lead.coefficient.get_mpz_t());
    remainder -= divisor.scaled(q.coefficient, q.monomial);
    quotient.push_back(std::move(q));
  }
  std::reverse(quotient.begin(), quotient.end());
  return Polynomial(ring_, std::move(quotient));
}

Polynomial Polynomial::linear_combination(RingPtr ring, std::span<const ScaledRef> parts) {
  std::vector<Term> out;
  std::size_t total = 0;
  for (const auto& part : parts) {
    require_same_ring(ring, part.source->ring_);
    if (part.factor != 0) total += part.source->terms_.size();
  }
  out.reserve(total);

  if (parts.size() == 1) {
    const auto& part = parts[0];
    if (part.factor != 0) {
      for (const auto& t : part.source->terms_) {
        out.push_back(Term{t.monomial * part.shift, t.coefficient * part.factor});
      }
    }
    return Polynomial(std::move(ring), std::move(out));
  }

  struct Cursor {
    const Term* it;
    const Term* end;
    long factor;
    Monomial shift;
    Monomial head;
  };
  std::vector<Cursor> cursors;
  cursors.reserve(parts.size());
  for (const auto& part : parts) {
    if (part.factor == 0 || part.source->is_zero()) continue;
    const auto& ts = part.source->terms_;
    Cursor c{ts.data(), ts.data() + ts.size(), part.factor, part.shift, {}};
    c.head = c.it->monomial * c.shift;
    cursors.push_back(c);
  }

  BigInt acc;
  while (!cursors.empty()) {
    Monomial smallest = cursors[0].head;
    for (std::size_t i = 1; i < cursors.size(); ++i) {
      if (cursors[i].head < smallest) smallest = cursors[i].head;
    }
    acc = 0;
    for (std::size_t i = 0; i < cursors.size();) {
      Cursor& c = cursors[i];
      if (c.head == smallest) {
        if (c.factor > 0) {
          mpz_addmul_ui(acc.get_mpz_t(), c.it->coefficient.get_mpz_t(),
                        static_cast<unsigned long>(c.factor));
        } else {
          mpz_submul_ui(acc.get_mpz_t(), c.it->coefficient.get_mpz_t(),
                        static_cast<unsigned long>(-c.factor));
        }
        if (++c.it == c.end) {
          c = cursors.back();
          cursors.pop_back();
          continue;
        }
        c.head = c.it->monomial * c.shift;
      }
      ++i;
    }
    if (acc != 0) out.push_back(Term{smallest, acc});
  }
  return Polynomial(std::move(ring), std::move(out));
}

// ---------------------------------------------------------------- text form

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << glrect::to_string(abs(t.coefficient));
    for (std::size_t v = 0; v < ring_->size(); ++v) {
      const unsigned e = t.monomial.exponent(v);
      if (e != 0) os << '*' << ring_->name(v) << '^' << e;
    }
  }
  return os.str();
}

namespace {

class TermParser {
 public:
  TermParser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_space();
    if (pos_ == text_.size()) throw std::invalid_argument("empty polynomial text");
    bool first = true;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(parse_term(sign));
    }
    return terms;
  }

 private:
  Term parse_term(int sign) {
    BigInt coefficient = sign;
    std::vector<unsigned> exponents(ring_.size(), 0);
    bool have_factor = false;
    while (true) {
      skip_space();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coefficient *= parse_bigint(read_while([](char c) { return std::isdigit(c) != 0; }));
      } else if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
        const auto name = read_while([](char c) { return std::isalnum(c) != 0 || c == '_'; });
        const auto index = ring_.index_of(name);
        if (!index) fail("unknown variable '" + std::string(name) + "'");
        unsigned e = 1;
        skip_space();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip_space();
          const auto digits = read_while([](char c) { return std::isdigit(c) != 0; });
          if (digits.empty()) fail("expected exponent");
          e = static_cast<unsigned>(std::stoul(std::string(digits)));
        }
        exponents[*index] += e;
      } else {
        fail("expected coefficient or variable");
      }
      have_factor = true;
      skip_space();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    return Term{Monomial::from_exponents(exponents), coefficient};
  }

  template <typename Pred>
  std::string_view read_while(Pred pred) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
  auto terms = TermParser(*ring, text).parse();
  return from_terms(std::move(ring), std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial ||
        a.terms_[i].coefficient != b.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- free ops

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a);
  out += b;
  return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring());
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  return Polynomial::from_terms(a.ring(), multiply_range(small.terms(), 0, small.size(), large.terms()));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return poly_add(a, b); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a);
  out -= b;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

}  // namespace glrect
