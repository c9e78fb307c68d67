#pragma once

#include <optional>
#include <string_view>

#include "probstirling/distributions.hpp"
#include "probstirling/polynomial.hpp"
#include "probstirling/rational.hpp"

namespace probstirling {

// Stirling polynomials of the second kind attached to a random variable Y:
//
//   S_Y(n,m;x) = (1/m!) sum_{k=0}^m C(m,k) (-1)^{m-k} E(x + S_k)^n,
//
// with S_k a sum of k independent copies of Y. The four general paths below
// share only the raw moments of Y; each builds its own intermediates.

enum class GenStirlingPath {
  AlternatingSum,
  GeneratingFunction,
  UniformRepresentation,
  FactorialMoments,
  ClosedForm,
};

std::string_view to_string(GenStirlingPath path);

struct GenStirlingResult {
  Rational value;
  GenStirlingPath path;
};

/// Default bound on m for sy_via_uniform_rep.
inline constexpr unsigned kUniformRepMaxM = 4;

/// Alternating moment sum. Zero for m > n.
Rational sy(const Distribution& dist, unsigned n, unsigned m, const Rational& x);

/// S_Y(n,m;x) as a polynomial in x of degree at most n - m.
/// Throws std::invalid_argument for m > n.
Polynomial sy_poly(const Distribution& dist, unsigned n, unsigned m);

/// n! [z^n] of e^{xz} (E e^{zY} - 1)^m / m!.
Rational sy_via_gf(const Distribution& dist, unsigned n, unsigned m, const Rational& x);

/// C(n,m) E[Y_1...Y_m (x + Y_1 U_1 + ... + Y_m U_m)^{n-m}] with U_j uniform on
/// [0,1], expanded multinomially. Throws std::invalid_argument for m > n or
/// m > max_m.
Rational sy_via_uniform_rep(const Distribution& dist, unsigned n, unsigned m, const Rational& x,
                            unsigned max_m = kUniformRepMaxM);

/// (1/m!) sum_i S(n,i) sum_k C(m,k) (-1)^{m-k} E (x + S_k)_i, with the
/// falling factorial expanded through signed Stirling numbers of the first kind.
Rational sy_via_factorial(const Distribution& dist, unsigned n, unsigned m, const Rational& x);

// Closed forms at x = 0. All throw std::invalid_argument for m > n.

/// Unit exponential: C(n,m) <m>_{n-m}.
Rational sy_closed_exponential(unsigned n, unsigned m);
/// Poisson(lambda): sum_{r=m}^n S(n,r) S(r,m) lambda^r. Any rational lambda.
Rational sy_closed_poisson(unsigned n, unsigned m, const Rational& lambda);
/// Y + 1 with Y geometric(q), p = 1 - q:
/// q^{-m} sum_{r=m}^n C(r,m) <m>_{r-m} S(n,r) (q/p)^r. Requires 0 < q < 1.
Rational sy_closed_geometric_shifted(unsigned n, unsigned m, const Rational& q);
/// Standard normal: 0 for odd n_power; (-1)^n H_{2n}(0) S(n,m) for n_power = 2n.
Rational sy_closed_normal(unsigned n_power, unsigned m);
/// Uniform on [0,1]: n!/(n+m)! sum_k C(n+m,n+k) (-1)^{m-k} S(n+k,k).
Rational sy_closed_uniform(unsigned n, unsigned m);
/// U T: (-1)^n n!/(n+m)! sum_k C(n+m,n+k) (-1)^{m-k} s(n+k,k).
Rational sy_closed_ut(unsigned n, unsigned m);

/// x-Whitney numbers of the second kind W_alpha(n,m;x) = S_alpha(n,m;x) / alpha^m.
/// Throws std::invalid_argument for alpha = 0.
Rational whitney(const Rational& alpha, unsigned n, unsigned m, const Rational& x);

/// Probabilists' Hermite polynomial at zero: E (iZ)^n for Z standard normal.
Rational hermite_at_zero(unsigned n);

/// Closed form for dist at (n,m,x) if one is known: exponential, Poisson,
/// shift:1:geom, normal, uniform, ut (x = 0 only), Bernoulli and constants
/// (any x). Empty otherwise.
std::optional<Rational> sy_closed_form(const Distribution& dist, unsigned n, unsigned m,
                                       const Rational& x);

/// Dispatches to one path. Throws std::invalid_argument when the path does not
/// apply (no closed form, uniform representation over its cap).
GenStirlingResult sy_by_path(const Distribution& dist, unsigned n, unsigned m, const Rational& x,
                             GenStirlingPath path);

}  // namespace probstirling
