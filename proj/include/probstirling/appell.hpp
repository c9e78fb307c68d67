#pragma once

#include <string>
#include <string_view>

#include "probstirling/distributions.hpp"
#include "probstirling/polynomial.hpp"
#include "probstirling/report.hpp"
#include "probstirling/series.hpp"

namespace probstirling {

/// Generating function G(A(0), z) of an Appell sequence, truncated. The
/// constant term must be nonzero.
class AppellSeed {
 public:
  AppellSeed(std::string name, EGFSeries g0);

  const std::string& name() const { return name_; }
  const EGFSeries& g0() const { return g0_; }
  unsigned order() const { return g0_.order(); }

 private:
  std::string name_;
  EGFSeries g0_;
};

/// Polynomials A_n(x) with G(A(x), z) = G(A(0), z) e^{xz}, n <= order.
struct AppellSequence {
  AppellSeed seed;
  unsigned order() const { return seed.order(); }
};

/// Constant series 1: A_n(x) = x^n, the identity for binomial convolution.
AppellSeed identity_seed(unsigned order);
/// z / (e^z - 1), obtained by inverting (e^z - 1)/z.
AppellSeed bernoulli_seed(unsigned order);
/// 2 / (e^z + 1).
AppellSeed euler_seed(unsigned order);
/// e^{-z^2/2} (probabilists' Hermite polynomials).
AppellSeed hermite_seed(unsigned order);

/// Family by CLI name: bernoulli, euler, hermite, moment:<dist>.
/// Throws std::invalid_argument for unknown names.
AppellSeed appell_family(std::string_view name, unsigned order);

/// A_n(x) = sum_k C(n,k) A_k(0) x^{n-k}. Throws std::out_of_range for n > order.
Rational appell_eval(const AppellSequence& seq, unsigned n, const Rational& x);
Polynomial appell_poly(const AppellSequence& seq, unsigned n);

/// Seed of the binomial convolution: product of the two seeds.
/// Throws std::invalid_argument on order mismatch.
AppellSeed binomial_convolve(const AppellSeed& a, const AppellSeed& c);

/// k-fold binomial convolution; k = 0 gives the identity seed.
AppellSeed kfold(const AppellSeed& a, unsigned k);

/// sum_{k=0}^N A_n(k;x) against the binomial middle sum and the weighted
/// sum sum_{k<=n} c_{n,N}(k) A_n(k;x), with A(k;x) the k-fold convolution.
/// Requires N >= n (std::invalid_argument) and n <= a.order().
IdentityReport theorem12_check(const AppellSeed& a, unsigned n, unsigned N, const Rational& x);

/// Seed E e^{zY}, so that A_n(x) = E (x + Y)^n.
AppellSeed appell_moment_link(const Distribution& dist, unsigned order);

}  // namespace probstirling
