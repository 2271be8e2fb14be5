#include "glrect/rational_kernel.hpp"

#include <stdexcept>
#include <utility>

#include "glrect/error.hpp"

namespace glrect {

namespace {

void trim(std::vector<Polynomial>& coefficients) {
  while (!coefficients.empty() && coefficients.back().is_zero()) coefficients.pop_back();
}

RingPtr series_ring_for(const RingPtr& coefficient_ring) {
  if (same_ring(coefficient_ring, Ring::two_row())) return Ring::kernel();
  auto names = coefficient_ring->names();
  names.push_back("X");
  return Ring::make(std::move(names));
}

}  // namespace

RingPtr coefficient_ring_of(const RingPtr& series_ring) {
  if (series_ring->size() == 0) throw std::invalid_argument("series ring has no variables");
  if (same_ring(series_ring, Ring::kernel())) return Ring::two_row();
  auto names = series_ring->names();
  names.pop_back();
  return Ring::make(std::move(names));
}

std::vector<Polynomial> split_series_variable(const Polynomial& p, const RingPtr& coefficient_ring) {
  const std::size_t series_var = p.ring()->size() - 1;
  std::vector<std::vector<Term>> buckets;
  for (const auto& t : p.terms()) {
    const unsigned e = t.monomial.exponent(series_var);
    if (buckets.size() <= e) buckets.resize(e + 1);
    buckets[e].push_back(Term{t.monomial.without(series_var), t.coefficient});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& bucket : buckets) out.push_back(Polynomial::from_terms(coefficient_ring, std::move(bucket)));
  return out;
}

Polynomial join_series_variable(const std::vector<Polynomial>& coefficients, const RingPtr& series_ring) {
  const std::size_t series_var = series_ring->size() - 1;
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const Monomial power = Monomial::variable(series_var, static_cast<unsigned>(i));
    for (const auto& t : coefficients[i].terms()) terms.push_back(Term{t.monomial * power, t.coefficient});
  }
  return Polynomial::from_terms(series_ring, std::move(terms));
}

RationalKernel::RationalKernel(RingPtr coefficient_ring, std::vector<Polynomial> numerator,
                               std::vector<Polynomial> denominator)
    : coefficient_ring_(std::move(coefficient_ring)),
      numerator_(std::move(numerator)),
      denominator_(std::move(denominator)) {
  for (const auto& p : numerator_) {
    if (!same_ring(p.ring(), coefficient_ring_)) throw RingMismatch("kernel numerator ring");
  }
  for (const auto& p : denominator_) {
    if (!same_ring(p.ring(), coefficient_ring_)) throw RingMismatch("kernel denominator ring");
  }
  trim(numerator_);
  trim(denominator_);
  if (denominator_.empty()) throw std::domain_error("kernel denominator is zero");
}

RationalKernel RationalKernel::from_series_ring(const Polynomial& numerator, const Polynomial& denominator) {
  if (!same_ring(numerator.ring(), denominator.ring())) throw RingMismatch("kernel parts differ in ring");
  auto coefficient_ring = coefficient_ring_of(numerator.ring());
  return RationalKernel(coefficient_ring, split_series_variable(numerator, coefficient_ring),
                        split_series_variable(denominator, coefficient_ring));
}

void RationalKernel::normalize() {
  BigInt g = 0;
  for (const auto* side : {&numerator_, &denominator_}) {
    for (const auto& p : *side) {
      const BigInt c = p.content();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
  }
  if (g != 0 && g != 1) {
    for (auto* side : {&numerator_, &denominator_}) {
      for (auto& p : *side) p = p.divide_exact(g);
    }
  }
  const Polynomial& d0 = denominator_.front();
  if (d0.is_constant() && !d0.is_zero() && d0.terms().front().coefficient < 0) {
    for (auto* side : {&numerator_, &denominator_}) {
      for (auto& p : *side) p = -p;
    }
  }
  const Polynomial& lead = denominator_.front();
  normalized_ = lead.is_constant() && !lead.is_zero() && lead.terms().front().coefficient == 1;
}

std::string RationalKernel::to_string() const {
  const RingPtr ring = series_ring_for(coefficient_ring_);
  return "(" + join_series_variable(numerator_, ring).to_string() + ") / (" +
         join_series_variable(denominator_, ring).to_string() + ")";
}

std::vector<Polynomial> series_expand(const RationalKernel& kernel, std::size_t n_max) {
  const auto& num = kernel.numerator();
  const auto& den = kernel.denominator();
  if (den.front().is_zero()) throw Error("kernel denominator has zero constant term");
  const Polynomial& d0 = den.front();
  const bool unit = d0.is_constant() && d0.terms().front().coefficient == 1;

  std::vector<Polynomial> series;
  series.reserve(n_max + 1);
  for (std::size_t k = 0; k <= n_max; ++k) {
    Polynomial c = k < num.size() ? num[k] : Polynomial(kernel.coefficient_ring());
    for (std::size_t j = 1; j < den.size() && j <= k; ++j) {
      if (!den[j].is_zero()) c -= den[j] * series[k - j];
    }
    series.push_back(unit ? std::move(c) : c.divide_exact(d0));
  }
  return series;
}

}  // namespace glrect
