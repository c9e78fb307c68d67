#pragma once

#include <vector>

#include "probstirling/rational.hpp"

namespace probstirling {

class Distribution;

/// Power series sum_j a_j z^j truncated after z^order. Coefficients are the
/// ordinary ones; the exponential-generating-function coefficient n! a_n is
/// only produced by egf_coefficient().
class EGFSeries {
 public:
  /// Zero series of the given order.
  explicit EGFSeries(unsigned order) : coeffs_(order + 1) {}
  /// Takes coefficients a_0..a_order; order = coeffs.size() - 1 (must be non-empty).
  explicit EGFSeries(std::vector<Rational> coeffs);

  static EGFSeries constant(unsigned order, const Rational& c);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](unsigned j) const { return coeffs_.at(j); }

  EGFSeries& operator+=(const EGFSeries& rhs);
  EGFSeries& operator-=(const EGFSeries& rhs);
  EGFSeries& operator*=(const Rational& scalar);
  friend EGFSeries operator+(EGFSeries a, const EGFSeries& b) { return a += b; }
  friend EGFSeries operator-(EGFSeries a, const EGFSeries& b) { return a -= b; }
  friend EGFSeries operator*(EGFSeries a, const Rational& s) { return a *= s; }
  friend bool operator==(const EGFSeries&, const EGFSeries&) = default;

  /// Drops the (zero) constant term and divides by z: f(z)/z, order - 1.
  /// Throws std::domain_error if the constant term is nonzero or order is 0.
  EGFSeries shift_down() const;

 private:
  std::vector<Rational> coeffs_;
};

/// e^z truncated at order.
EGFSeries series_exp(unsigned order);

/// e^{c z} truncated at order.
EGFSeries series_exp_scaled(unsigned order, const Rational& c);

/// Truncated Cauchy product. Throws std::invalid_argument on order mismatch.
EGFSeries series_mul(const EGFSeries& f, const EGFSeries& g);

EGFSeries series_pow(const EGFSeries& f, unsigned m);

/// h with h g = f. Throws std::domain_error if g has zero constant term,
/// std::invalid_argument on order mismatch.
EGFSeries series_div(const EGFSeries& f, const EGFSeries& g);

/// E e^{zY} = sum_n E[Y^n] z^n / n!.
EGFSeries series_from_moments(const Distribution& dist, unsigned order);

/// n! [z^n] f. Throws std::out_of_range when n > f.order().
Rational egf_coefficient(const EGFSeries& f, unsigned n);

}  // namespace probstirling
