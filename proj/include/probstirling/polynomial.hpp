#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "probstirling/rational.hpp"

namespace probstirling {

/// Dense univariate polynomial with rational coefficients. coeffs()[j] is the
/// coefficient of x^j; trailing zeros are trimmed so the zero polynomial has
/// no coefficients at all.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// x^n
  static Polynomial monomial(unsigned n);
  /// <x>_n = x(x+1)...(x+n-1)
  static Polynomial rising_factorial(unsigned n);
  /// (x)_n = x(x-1)...(x-n+1)
  static Polynomial falling_factorial(unsigned n);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(std::size_t j) const;
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;

  /// q(x) = p(x + shift)
  Polynomial shifted(const Rational& shift) const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace probstirling
