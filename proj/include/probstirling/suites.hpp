#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "probstirling/appell.hpp"
#include "probstirling/distributions.hpp"
#include "probstirling/report.hpp"

namespace probstirling {

// Verification sweeps behind `verify <suite>`. Each returns one report per
// grid point, in a fixed order.

/// Classical sums of powers: sum_k (x+k)^n, the Stirling-polynomial form and
/// the c_{n,N} form, for n <= n_max, N <= N_max.
std::vector<IdentityReport> suite_theorem1(unsigned n_max, unsigned N_max, std::span<const Rational> xs);

/// sum_k <k>_n, sum_m C(N+1,m+1) (n)_m <m>_{n-m}, sum_k c_{n,N}(k) <k>_n.
std::vector<IdentityReport> suite_theorem9(unsigned n_max, unsigned N_max);

/// sum_k B_n(k lambda), sum_m C(N+1,m+1) m! S_Y(n,m) (Poisson closed form),
/// sum_k c_{n,N}(k) B_n(k lambda).
std::vector<IdentityReport> suite_theorem10(const Rational& lambda, unsigned n_max, unsigned N_max);

/// sum_k (p/q)^k Li^{*k}_{-n}(q), the shifted-geometric closed form sum, and
/// the c_{n,N} form.
std::vector<IdentityReport> suite_theorem11(const Rational& q, unsigned n_max, unsigned N_max);

/// theorem12_check for n <= n_max, n <= N <= N_max.
std::vector<IdentityReport> suite_theorem12(const AppellSeed& family, unsigned n_max, unsigned N_max,
                                            std::span<const Rational> xs);

/// sy, sy_via_gf, sy_poly evaluated at x; all m <= n <= n_max.
std::vector<IdentityReport> suite_gf(const Distribution& dist, unsigned n_max, std::span<const Rational> xs);

/// sy, sy_via_factorial, and sy_via_uniform_rep (m <= cap) or sy_via_gf;
/// plus a "closed" report wherever a closed form applies.
std::vector<IdentityReport> suite_paths(const Distribution& dist, unsigned n_max,
                                        std::span<const Rational> xs);

std::vector<IdentityReport> suite_bernoulli_classic(unsigned n_max, unsigned N_max,
                                                    std::span<const Rational> xs);

}  // namespace probstirling
