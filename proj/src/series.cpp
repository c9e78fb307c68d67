#include "probstirling/series.hpp"

#include <stdexcept>

#include "probstirling/combinatorics.hpp"
#include "probstirling/distributions.hpp"

namespace probstirling {

namespace {

void require_same_order(const EGFSeries& f, const EGFSeries& g) {
  if (f.order() != g.order()) throw std::invalid_argument("series order mismatch");
}

}  // namespace

EGFSeries::EGFSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("EGFSeries needs at least one coefficient");
}

EGFSeries EGFSeries::constant(unsigned order, const Rational& c) {
  EGFSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

EGFSeries& EGFSeries::operator+=(const EGFSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

EGFSeries& EGFSeries::operator-=(const EGFSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

EGFSeries& EGFSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

EGFSeries EGFSeries::shift_down() const {
  if (order() == 0) throw std::domain_error("shift_down: order 0 series");
  if (!coeffs_[0].is_zero()) throw std::domain_error("shift_down: nonzero constant term");
  return EGFSeries(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

EGFSeries series_exp(unsigned order) { return series_exp_scaled(order, 1); }

EGFSeries series_exp_scaled(unsigned order, const Rational& c) {
  std::vector<Rational> a(order + 1);
  a[0] = 1;
  for (unsigned j = 1; j <= order; ++j) a[j] = a[j - 1] * c / Rational(j);
  return EGFSeries(std::move(a));
}

EGFSeries series_mul(const EGFSeries& f, const EGFSeries& g) {
  require_same_order(f, g);
  const unsigned order = f.order();
  std::vector<Rational> h(order + 1);
  for (unsigned i = 0; i <= order; ++i) {
    if (f[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= order; ++j) h[i + j] += f[i] * g[j];
  }
  return EGFSeries(std::move(h));
}

EGFSeries series_pow(const EGFSeries& f, unsigned m) {
  EGFSeries result = EGFSeries::constant(f.order(), 1);
  EGFSeries base = f;
  while (m > 0) {
    if (m & 1u) result = series_mul(result, base);
    m >>= 1;
    if (m > 0) base = series_mul(base, base);
  }
  return result;
}

EGFSeries series_div(const EGFSeries& f, const EGFSeries& g) {
  require_same_order(f, g);
  if (g[0].is_zero()) throw std::domain_error("series_div: divisor has zero constant term");
  const unsigned order = f.order();
  const Rational g0_inv = g[0].inverse();
  std::vector<Rational> h(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    Rational acc = f[n];
    for (unsigned j = 1; j <= n; ++j) acc -= g[j] * h[n - j];
    h[n] = acc * g0_inv;
  }
  return EGFSeries(std::move(h));
}

EGFSeries series_from_moments(const Distribution& dist, unsigned order) {
  std::vector<Rational> a(order + 1);
  for (unsigned n = 0; n <= order; ++n) a[n] = moment(dist, n) / factorial(n);
  return EGFSeries(std::move(a));
}

Rational egf_coefficient(const EGFSeries& f, unsigned n) {
  if (n > f.order()) throw std::out_of_range("egf_coefficient: n beyond truncation order");
  return factorial(n) * f[n];
}

}  // namespace probstirling
