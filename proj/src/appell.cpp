#include "probstirling/appell.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "probstirling/combinatorics.hpp"

namespace probstirling {

AppellSeed::AppellSeed(std::string name, EGFSeries g0) : name_(std::move(name)), g0_(std::move(g0)) {
  if (g0_[0].is_zero()) throw std::invalid_argument("Appell seed '" + name_ + "' has zero constant term");
}

AppellSeed identity_seed(unsigned order) { return {"identity", EGFSeries::constant(order, 1)}; }

AppellSeed bernoulli_seed(unsigned order) {
  // (e^z - 1)/z needs e^z through z^{order+1}.
  const EGFSeries em1 = series_exp(order + 1) - EGFSeries::constant(order + 1, 1);
  return {"bernoulli", series_div(EGFSeries::constant(order, 1), em1.shift_down())};
}

AppellSeed euler_seed(unsigned order) {
  const EGFSeries ep1 = series_exp(order) + EGFSeries::constant(order, 1);
  return {"euler", series_div(EGFSeries::constant(order, 2), ep1)};
}

AppellSeed hermite_seed(unsigned order) {
  std::vector<Rational> a(order + 1);
  Rational term = 1;  // (-1/2)^j / j!
  for (unsigned j = 0; 2 * j <= order; ++j) {
    a[2 * j] = term;
    term *= Rational(-1, 2) / Rational(j + 1);
  }
  return {"hermite", EGFSeries(std::move(a))};
}

AppellSeed appell_family(std::string_view name, unsigned order) {
  if (name == "bernoulli") return bernoulli_seed(order);
  if (name == "euler") return euler_seed(order);
  if (name == "hermite") return hermite_seed(order);
  if (name.rfind("moment:", 0) == 0) return appell_moment_link(Distribution::parse(name.substr(7)), order);
  throw std::invalid_argument("unknown Appell family '" + std::string(name) + "'");
}

Rational appell_eval(const AppellSequence& seq, unsigned n, const Rational& x) {
  return appell_poly(seq, n)(x);
}

Polynomial appell_poly(const AppellSequence& seq, unsigned n) {
  if (n > seq.order()) throw std::out_of_range("appell: n beyond truncation order");
  // coefficient of x^{n-k} is C(n,k) A_k(0) = C(n,k) k! a_k
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[n - k] = binomial(n, k) * egf_coefficient(seq.seed.g0(), k);
  return Polynomial(std::move(c));
}

AppellSeed binomial_convolve(const AppellSeed& a, const AppellSeed& c) {
  return {a.name() + "*" + c.name(), series_mul(a.g0(), c.g0())};
}

AppellSeed kfold(const AppellSeed& a, unsigned k) {
  if (k == 0) return identity_seed(a.order());
  if (k == 1) return a;
  return {a.name() + "^" + std::to_string(k), series_pow(a.g0(), k)};
}

IdentityReport theorem12_check(const AppellSeed& a, unsigned n, unsigned N, const Rational& x) {
  if (N < n) throw std::invalid_argument("theorem12_check: requires N >= n");

  // values[k] = A_n(k;x) for k = 0..N
  std::vector<Rational> values;
  values.reserve(N + 1);
  EGFSeries power = EGFSeries::constant(a.order(), 1);
  for (unsigned k = 0; k <= N; ++k) {
    values.push_back(appell_eval(AppellSequence{AppellSeed(a.name(), power)}, n, x));
    power = series_mul(power, a.g0());
  }

  Rational lhs;
  for (const Rational& v : values) lhs += v;

  Rational middle;
  for (unsigned m = 0; m <= std::min(n, N); ++m) {
    Rational diff;
    for (unsigned j = 0; j <= m; ++j) {
      Rational t = binomial(m, j) * values[j];
      diff += (m - j) % 2 == 1 ? -t : t;
    }
    middle += binomial(N + 1, m + 1) * diff;
  }

  const CnNTable c = cnn_table(n, N);
  Rational rhs;
  for (unsigned k = 0; k < c.values.size(); ++k) rhs += c.values[k] * values[k];

  return make_report("theorem12",
                     {{"family", a.name()}, {"n", std::to_string(n)}, {"N", std::to_string(N)},
                      {"x", x.str()}},
                     lhs, middle, rhs);
}

AppellSeed appell_moment_link(const Distribution& dist, unsigned order) {
  return {"moment:" + dist.str(), series_from_moments(dist, order)};
}

}  // namespace probstirling
