#pragma once

#include <span>
#include <vector>

#include "probstirling/combinatorics.hpp"
#include "probstirling/distributions.hpp"
#include "probstirling/polynomial.hpp"
#include "probstirling/report.hpp"

namespace probstirling {

/// c_{n,N} table, generated on first use and cached by (n, N).
const CnNTable& cached_cnn(unsigned n, unsigned N);

/// sum_{k=0}^N E (x + S_k)^n
Rational sum_direct(const Distribution& dist, unsigned n, unsigned N, const Rational& x);

/// sum_{m=0}^{min(n,N)} C(N+1,m+1) m! S_Y(n,m;x)
Rational sum_via_stirling(const Distribution& dist, unsigned n, unsigned N, const Rational& x);

/// sum_{k=0}^{min(n,N)} c_{n,N}(k) E (x + S_k)^n
Rational sum_via_cnn(const Distribution& dist, unsigned n, unsigned N, const Rational& x);

/// The three forms above for one (dist, n, N, x).
IdentityReport corollary8_check(const Distribution& dist, unsigned n, unsigned N, const Rational& x);

/// For a polynomial p of degree d:
///   lhs    sum_{k=0}^N E p(x + S_k)
///   middle sum_{m=0}^{min(d,N)} C(N+1,m+1) E Delta^m_{Y_1..Y_m} p(x), where the
///          expected iterated difference is sum_k C(m,k)(-1)^{m-k} E p(x + S_k)
///   rhs    sum_{k=0}^{min(d,N)} c_{d,N}(k) E p(x + S_k)
/// Throws std::invalid_argument for the zero polynomial.
IdentityReport sum_poly(const Polynomial& p, const Distribution& dist, unsigned N, const Rational& x);

/// sum_{k=0}^N (x+k)^n against the Stirling-polynomial sum and the Bernoulli
/// polynomial difference (B_{n+1}(x+N+1) - B_{n+1}(x)) / (n+1).
IdentityReport classical_bernoulli_check(unsigned n, unsigned N, const Rational& x);

/// corollary8_check over n <= n_max, N <= N_max, x in xs.
std::vector<IdentityReport> verify_corollary8(const Distribution& dist, unsigned n_max,
                                              unsigned N_max, std::span<const Rational> xs);

}  // namespace probstirling
