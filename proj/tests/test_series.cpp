#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "probstirling/combinatorics.hpp"
#include "probstirling/distributions.hpp"
#include "probstirling/series.hpp"

using namespace probstirling;

namespace {

EGFSeries make(std::vector<Rational> c) { return EGFSeries(std::move(c)); }

EGFSeries random_series(std::mt19937_64& rng, unsigned order, bool unit_constant) {
  std::vector<Rational> c(order + 1);
  for (auto& v : c) v = oracle::random_rational(rng, 7, 5);
  if (unit_constant) c[0] = Rational(1 + static_cast<long>(rng() % 3), 1 + static_cast<long>(rng() % 4));
  return EGFSeries(c);
}

}  // namespace

TEST_CASE("series_exp") {
  CHECK(series_exp(2) == make({1, 1, Rational(1, 2)}));
  CHECK(series_exp(0) == make({1}));
  CHECK(series_exp(4)[4] == Rational(1, 24));
  CHECK(series_exp_scaled(2, 3) == make({1, 3, Rational(9, 2)}));
}

TEST_CASE("series_mul") {
  CHECK(series_mul(series_exp(2), series_exp(2)) == make({1, 2, 2}));
  const EGFSeries f = make({Rational(1, 3), 5, Rational(-2, 7)});
  CHECK(series_mul(f, EGFSeries::constant(2, 1)) == f);
  CHECK(series_mul(make({1, 1, 0}), make({1, -1, 0})) == make({1, 0, -1}));
  CHECK_THROWS_AS(series_mul(series_exp(2), series_exp(3)), std::invalid_argument);
}

TEST_CASE("series_pow") {
  const EGFSeries em1 = series_exp(3) - EGFSeries::constant(3, 1);
  CHECK(series_pow(em1, 2) == make({0, 0, 1, 1}));
  CHECK(series_pow(em1, 0) == make({1, 0, 0, 0}));
  CHECK(series_pow(em1, 1) == em1);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const EGFSeries f = random_series(rng, 6, false);
    const unsigned a = static_cast<unsigned>(rng() % 5);
    const unsigned b = static_cast<unsigned>(rng() % 5);
    CHECK(series_pow(f, a + b) == series_mul(series_pow(f, a), series_pow(f, b)));
  }
}

TEST_CASE("series_div") {
  // 1 / ((e^z - 1)/z) = 1 - z/2 + z^2/12 - ...
  const EGFSeries em1 = (series_exp(3) - EGFSeries::constant(3, 1)).shift_down();
  const EGFSeries inv = series_div(EGFSeries::constant(2, 1), em1);
  CHECK(inv == make({1, Rational(-1, 2), Rational(1, 12)}));
  CHECK(egf_coefficient(inv, 2) == Rational(1, 6));

  const EGFSeries f = make({2, 3, 4});
  CHECK(series_div(f, f) == EGFSeries::constant(2, 1));
  CHECK_THROWS_AS(series_div(f, make({0, 1, 1})), std::domain_error);
  CHECK_THROWS_AS(series_div(f, series_exp(3)), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const unsigned order = static_cast<unsigned>(rng() % 13);
    const EGFSeries a = random_series(rng, order, false);
    const EGFSeries g = random_series(rng, order, true);
    CHECK(series_div(series_mul(a, g), g) == a);
  }
}

TEST_CASE("shift_down requires a zero constant term") {
  CHECK_THROWS_AS(series_exp(2).shift_down(), std::domain_error);
  CHECK_THROWS_AS(EGFSeries(0).shift_down(), std::domain_error);
}

TEST_CASE("egf_coefficient") {
  EGFSeries f = series_pow(series_exp(3) - EGFSeries::constant(3, 1), 2);
  f *= Rational(1, 2);
  CHECK(egf_coefficient(f, 3) == Rational(3));
  CHECK(egf_coefficient(series_exp(5), 5) == Rational(1));
  CHECK_THROWS_AS(egf_coefficient(series_exp(5), 6), std::out_of_range);
}

TEST_CASE("the classical Stirling generating function") {
  const unsigned order = 10;
  const EGFSeries em1 = series_exp(order) - EGFSeries::constant(order, 1);
  for (unsigned m = 0; m <= order; ++m) {
    EGFSeries f = series_pow(em1, m);
    f *= factorial(m).inverse();
    for (unsigned n = m; n <= order; ++n) CHECK(egf_coefficient(f, n) == stirling2(n, m));
  }
}

TEST_CASE("series_from_moments") {
  CHECK(series_from_moments(Distribution::constant(1), 3) == series_exp(3));
  CHECK(series_from_moments(Distribution::exponential(), 3) == make({1, 1, 1, 1}));
  CHECK(series_from_moments(Distribution::uniform01(), 2) == make({1, Rational(1, 2), Rational(1, 6)}));
}
