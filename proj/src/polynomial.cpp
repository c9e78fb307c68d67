#include "probstirling/polynomial.hpp"

#include <sstream>

#include "probstirling/combinatorics.hpp"

namespace probstirling {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(unsigned n) {
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::rising_factorial(unsigned n) {
  Polynomial p = constant(1);
  for (unsigned i = 0; i < n; ++i) p = p * Polynomial({Rational(i), Rational(1)});
  return p;
}

Polynomial Polynomial::falling_factorial(unsigned n) {
  Polynomial p = constant(1);
  for (unsigned i = 0; i < n; ++i) p = p * Polynomial({-Rational(i), Rational(1)});
  return p;
}

Rational Polynomial::coefficient(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : Rational(0);
}

Rational Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::shifted(const Rational& shift) const {
  // sum_j c_j (x+s)^j = sum_i x^i sum_{j>=i} c_j C(j,i) s^(j-i)
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    Rational spow = 1;
    for (std::size_t i = j + 1; i-- > 0;) {
      out[i] += coeffs_[j] * binomial(static_cast<unsigned>(j), static_cast<long>(i)) * spow;
      spow *= shift;
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) out[j - 1] = coeffs_[j] * Rational(j);
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    if (coeffs_[j].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[j];
    if (j >= 1) os << "*x";
    if (j >= 2) os << "^" << j;
    first = false;
  }
  return os.str();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace probstirling
