#pragma once

#include <span>
#include <vector>

#include "probstirling/polynomial.hpp"
#include "probstirling/rational.hpp"

namespace probstirling {

Rational factorial(unsigned n);

/// C(n, k); zero when k < 0 or k > n.
Rational binomial(unsigned n, long k);

/// <x>_n = x(x+1)...(x+n-1), with <x>_0 = 1.
Rational rising_factorial(const Rational& x, unsigned n);

/// (x)_n = x(x-1)...(x-n+1), with (x)_0 = 1.
Rational falling_factorial(const Rational& x, unsigned n);

/// Stirling numbers of the second kind from a memoized triangle
/// S(n,m) = m S(n-1,m) + S(n-1,m-1). Zero for m > n.
Rational stirling2(unsigned n, unsigned m);

/// S(n,m) as the alternating sum (1/m!) sum_k C(m,k) (-1)^(m-k) k^n, i.e.
/// the m-th forward difference of x^n at 0. Independent of the triangle.
Rational stirling2_alternating(unsigned n, unsigned m);

/// Signed Stirling numbers of the first kind, (x)_n = sum_k s(n,k) x^k.
Rational stirling1(unsigned n, unsigned k);

/// S(n,m;x) = Delta^m x^n / m! evaluated at x.
Rational stirling2_poly(unsigned n, unsigned m, const Rational& x);

/// Delta^m p, where Delta p(x) = p(x+1) - p(x).
Polynomial forward_diff(const Polynomial& p, unsigned m);

/// Delta_{y_1} o ... o Delta_{y_m} p evaluated at x, with
/// Delta_y p(x) = p(x+y) - p(x). An empty step list returns p(x).
Rational iterated_diff(const Polynomial& p, std::span<const Rational> steps, const Rational& x);

/// Weights c_{n,N}(k), k = 0..min(n,N), that collapse a sum of N+1 degree-n
/// polynomial values onto the first min(n,N)+1 of them.
struct CnNTable {
  unsigned n = 0;
  unsigned N = 0;
  std::vector<Rational> values;
};

CnNTable cnn_table(unsigned n, unsigned N);

/// Alternating closed form of c_{n,N}(k), valid only for N > n and k <= n.
/// Throws std::invalid_argument outside that domain.
Rational cnn_alternating(unsigned n, unsigned N, unsigned k);

/// Bell (Touchard) polynomial B_n(x) = sum_j S(n,j) x^j.
Rational bell_poly(unsigned n, const Rational& x);

}  // namespace probstirling
