#include <doctest.h>

#include <stdexcept>

#include "catalog.hpp"
#include "probstirling/appell.hpp"
#include "probstirling/combinatorics.hpp"
#include "probstirling/sums.hpp"

using namespace probstirling;

namespace {

AppellSequence seq(AppellSeed s) { return AppellSequence{std::move(s)}; }

Rational double_factorial_odd(unsigned n) {
  Rational r(1);
  for (unsigned j = 1; j < 2 * n; j += 2) r *= Rational(j);
  return r;
}

}  // namespace

TEST_CASE("seed values") {
  CHECK(appell_eval(seq(bernoulli_seed(4)), 2, 0) == Rational(1, 6));
  CHECK(appell_eval(seq(bernoulli_seed(4)), 1, 0) == Rational(-1, 2));
  CHECK(appell_eval(seq(bernoulli_seed(6)), 4, 0) == Rational(-1, 30));
  CHECK(appell_eval(seq(bernoulli_seed(6)), 3, 0) == Rational(0));
  CHECK(appell_eval(seq(euler_seed(4)), 1, 0) == Rational(-1, 2));
  CHECK(appell_eval(seq(euler_seed(4)), 3, 0) == Rational(1, 4));
  CHECK(appell_eval(seq(euler_seed(4)), 2, 1) == Rational(0));
  CHECK(appell_eval(seq(hermite_seed(4)), 2, 0) == Rational(-1));
  CHECK(appell_eval(seq(hermite_seed(4)), 4, 0) == Rational(3));
  CHECK(appell_eval(seq(identity_seed(5)), 5, Rational(2)) == Rational(32));
}

TEST_CASE("classical polynomial identities") {
  const auto b = seq(bernoulli_seed(8));
  const auto e = seq(euler_seed(8));
  const auto h = seq(hermite_seed(8));
  for (unsigned n = 1; n <= 8; ++n) {
    for (const Rational& x : {Rational(0), Rational(1, 3), Rational(-2)}) {
      // B_n(x+1) - B_n(x) = n x^{n-1}; E_n(x+1) + E_n(x) = 2 x^n
      CHECK(appell_eval(b, n, x + Rational(1)) - appell_eval(b, n, x) == Rational(n) * x.pow(n - 1));
      CHECK(appell_eval(e, n, x + Rational(1)) + appell_eval(e, n, x) == Rational(2) * x.pow(n));
    }
  }
  // He_{n+1}(x) = x He_n(x) - n He_{n-1}(x)
  for (unsigned n = 1; n < 8; ++n) {
    const Polynomial lhs = appell_poly(h, n + 1);
    const Polynomial rhs = Polynomial::monomial(1) * appell_poly(h, n) - appell_poly(h, n - 1) * Rational(n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("appell_poly agrees with appell_eval and differentiates down") {
  for (const char* name : {"bernoulli", "euler", "hermite", "moment:uniform", "moment:poisson:1/2"}) {
    const auto a = seq(appell_family(name, 8));
    CAPTURE(name);
    for (unsigned n = 0; n <= 8; ++n) {
      const Polynomial p = appell_poly(a, n);
      CHECK(p.degree() == static_cast<int>(n));
      for (const Rational& x : {Rational(0), Rational(1), Rational(-3, 4)}) CHECK(p(x) == appell_eval(a, n, x));
      if (n > 0) CHECK(p.derivative() == appell_poly(a, n - 1) * Rational(n));
    }
  }
}

TEST_CASE("binomial convolution") {
  const unsigned order = 7;
  const AppellSeed b = bernoulli_seed(order);
  const AppellSeed e = euler_seed(order);
  const AppellSeed id = identity_seed(order);
  CHECK(binomial_convolve(b, id).g0() == b.g0());
  CHECK(binomial_convolve(id, e).g0() == e.g0());
  CHECK(binomial_convolve(b, e).g0() == binomial_convolve(e, b).g0());
  CHECK(binomial_convolve(b, b).g0() == series_pow(b.g0(), 2));
  CHECK(binomial_convolve(b, e).name() == "bernoulli*euler");
  CHECK_THROWS_AS(binomial_convolve(b, euler_seed(order + 1)), std::invalid_argument);

  // (A * C)_n(x + y) = sum_j C(n,j) A_j(x) C_{n-j}(y)
  const auto bc = seq(binomial_convolve(b, e));
  const Rational x(1, 2), y(-2);
  for (unsigned n = 0; n <= order; ++n) {
    Rational s;
    for (unsigned j = 0; j <= n; ++j) {
      s += binomial(n, j) * appell_eval(seq(b), j, x) * appell_eval(seq(e), n - j, y);
    }
    CHECK(appell_eval(bc, n, x + y) == s);
  }
}

TEST_CASE("kfold group law") {
  const AppellSeed h = hermite_seed(8);
  CHECK(kfold(h, 0).g0() == identity_seed(8).g0());
  CHECK(kfold(h, 1).g0() == h.g0());
  CHECK(kfold(h, 3).name() == "hermite^3");
  for (const auto& a : {bernoulli_seed(8), euler_seed(8), h}) {
    for (unsigned j = 0; j <= 3; ++j) {
      for (unsigned k = 0; k <= 3; ++k) {
        CHECK(kfold(a, j + k).g0() == series_mul(kfold(a, j).g0(), kfold(a, k).g0()));
      }
    }
  }
  for (unsigned n = 0; n <= 6; ++n) CHECK(appell_eval(seq(kfold(h, 0)), n, Rational(3)) == Rational(3).pow(n));
}

TEST_CASE("Hermite k-fold values at zero") {
  for (unsigned k = 0; k <= 5; ++k) {
    const auto a = seq(kfold(hermite_seed(12), k));
    for (unsigned n = 0; n <= 6; ++n) {
      const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
      CHECK(appell_eval(a, 2 * n, 0) == sign * Rational(k).pow(n) * double_factorial_odd(n));
    }
    for (unsigned n = 1; n <= 11; n += 2) CHECK(appell_eval(a, n, 0) == Rational(0));
    // A_2(k;x) = x^2 - k
    CHECK(appell_poly(a, 2) == Polynomial{Rational(-static_cast<long>(k)), 0, 1});
  }
}

TEST_CASE("theorem12_check examples") {
  const IdentityReport r = theorem12_check(hermite_seed(2), 2, 3, 1);
  CHECK(r.pass);
  CHECK(r.lhs == Rational(-2));
  CHECK(r.rhs == Rational(-2));
  CHECK(r.identity == "theorem12");
  CHECK(theorem12_check(bernoulli_seed(3), 3, 5, 0).pass);
  for (unsigned N = 0; N <= 6; ++N) {
    const IdentityReport z = theorem12_check(euler_seed(4), 0, N, Rational(1, 2));
    CHECK(z.pass);
    CHECK(z.lhs == Rational(N + 1));
  }
  CHECK_THROWS_AS(theorem12_check(bernoulli_seed(4), 3, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(theorem12_check(bernoulli_seed(2), 3, 5, 0), std::out_of_range);
}

TEST_CASE("theorem12 holds for the three classical families") {
  for (const char* name : {"bernoulli", "euler", "hermite"}) {
    const AppellSeed a = appell_family(name, 6);
    for (unsigned n = 0; n <= 6; ++n) {
      for (unsigned N = n; N <= 12; ++N) {
        for (const Rational& x : {Rational(0), Rational(1), Rational(1, 2)}) {
          const IdentityReport r = theorem12_check(a, n, N, x);
          CAPTURE(name);
          CAPTURE(n);
          CAPTURE(N);
          CHECK(r.pass);
        }
      }
    }
  }
}

TEST_CASE("theorem12 on moment seeds matches the distribution sums") {
  for (const auto& d : testing_catalog::catalog()) {
    const AppellSeed a = appell_moment_link(d, 5);
    for (unsigned n = 0; n <= 5; ++n) {
      for (unsigned N = n; N <= 8; ++N) {
        const IdentityReport t = theorem12_check(a, n, N, Rational(1, 2));
        const IdentityReport c = corollary8_check(d, n, N, Rational(1, 2));
        CHECK(t.pass);
        CHECK(t.lhs == c.lhs);
        CHECK(t.rhs == c.rhs);
      }
    }
  }
}

TEST_CASE("moment link") {
  const auto ex = seq(appell_moment_link(Distribution::exponential(), 6));
  const auto un = seq(appell_moment_link(Distribution::uniform01(), 6));
  const Rational alpha(-2, 3);
  const auto co = seq(appell_moment_link(Distribution::constant(alpha), 6));
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(appell_eval(ex, n, 0) == factorial(n));
    CHECK(appell_eval(un, n, 0) == Rational(1, static_cast<long>(n) + 1));
    CHECK(appell_eval(co, n, Rational(5)) == (Rational(5) + alpha).pow(n));
  }
  for (const auto& d : testing_catalog::catalog()) {
    const auto a = seq(appell_moment_link(d, 6));
    for (unsigned n = 0; n <= 6; ++n) {
      CHECK(appell_eval(a, n, Rational(-1, 3)) == shifted_sum_moment(d, 1, n, Rational(-1, 3)));
      for (unsigned k = 0; k <= 3; ++k) {
        CHECK(appell_eval(seq(kfold(a.seed, k)), n, Rational(2)) == shifted_sum_moment(d, k, n, Rational(2)));
      }
    }
  }
  CHECK(appell_family("moment:exp", 3).g0() == appell_moment_link(Distribution::exponential(), 3).g0());
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(AppellSeed("zero", EGFSeries(3)), std::invalid_argument);
  CHECK_THROWS_AS(appell_family("laguerre", 3), std::invalid_argument);
  CHECK_THROWS_AS(appell_family("moment:bogus", 3), std::invalid_argument);
  CHECK_THROWS_AS(appell_eval(seq(bernoulli_seed(3)), 4, 0), std::out_of_range);
  CHECK_THROWS_AS(appell_poly(seq(hermite_seed(3)), 4), std::out_of_range);
}
