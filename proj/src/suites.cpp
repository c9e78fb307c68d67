#include "probstirling/suites.hpp"

#include <algorithm>
#include <string>

#include "probstirling/combinatorics.hpp"
#include "probstirling/gen_stirling.hpp"
#include "probstirling/polylog.hpp"
#include "probstirling/sums.hpp"

namespace probstirling {

namespace {

/// lhs = sum_k f(k), middle = sum_m C(N+1,m+1) g(m), rhs = sum_{k<=min(n,N)} c_{n,N}(k) f(k)
template <class Term, class Weighted>
IdentityReport three_sums(std::string name, ReportParams params, unsigned n, unsigned N, Term f,
                          Weighted g) {
  std::vector<Rational> values(N + 1);
  for (unsigned k = 0; k <= N; ++k) values[k] = f(k);
  Rational lhs;
  for (const Rational& v : values) lhs += v;
  Rational middle;
  for (unsigned m = 0; m <= std::min(n, N); ++m) middle += binomial(N + 1, m + 1) * g(m);
  const CnNTable& c = cached_cnn(n, N);
  Rational rhs;
  for (unsigned k = 0; k < c.values.size(); ++k) rhs += c.values[k] * values[k];
  return make_report(std::move(name), std::move(params), lhs, middle, rhs);
}

ReportParams grid(unsigned n, unsigned N) { return {{"n", std::to_string(n)}, {"N", std::to_string(N)}}; }

}  // namespace

std::vector<IdentityReport> suite_theorem1(unsigned n_max, unsigned N_max, std::span<const Rational> xs) {
  std::vector<IdentityReport> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned N = 0; N <= N_max; ++N) {
      for (const Rational& x : xs) {
        ReportParams params = grid(n, N);
        params.emplace_back("x", x.str());
        out.push_back(three_sums(
            "theorem1", std::move(params), n, N, [&](unsigned k) { return (x + Rational(k)).pow(n); },
            [&](unsigned m) { return factorial(m) * stirling2_poly(n, m, x); }));
      }
    }
  }
  return out;
}

std::vector<IdentityReport> suite_theorem9(unsigned n_max, unsigned N_max) {
  std::vector<IdentityReport> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned N = 0; N <= N_max; ++N) {
      out.push_back(three_sums(
          "theorem9", grid(n, N), n, N, [&](unsigned k) { return rising_factorial(Rational(k), n); },
          [&](unsigned m) {
            return falling_factorial(Rational(n), m) * rising_factorial(Rational(m), n - m);
          }));
    }
  }
  return out;
}

std::vector<IdentityReport> suite_theorem10(const Rational& lambda, unsigned n_max, unsigned N_max) {
  std::vector<IdentityReport> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned N = 0; N <= N_max; ++N) {
      ReportParams params = grid(n, N);
      params.emplace_back("lambda", lambda.str());
      out.push_back(three_sums(
          "theorem10", std::move(params), n, N,
          [&](unsigned k) { return bell_poly(n, Rational(k) * lambda); },
          [&](unsigned m) { return factorial(m) * sy_closed_poisson(n, m, lambda); }));
    }
  }
  return out;
}

std::vector<IdentityReport> suite_theorem11(const Rational& q, unsigned n_max, unsigned N_max) {
  const Rational p_over_q = (Rational(1) - q) / q;
  std::vector<IdentityReport> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned N = 0; N <= N_max; ++N) {
      ReportParams params = grid(n, N);
      params.emplace_back("q", q.str());
      out.push_back(three_sums(
          "theorem11", std::move(params), n, N,
          [&](unsigned k) { return p_over_q.pow(k) * li_conv_direct(n, k, q); },
          [&](unsigned m) { return factorial(m) * sy_closed_geometric_shifted(n, m, q); }));
    }
  }
  return out;
}

std::vector<IdentityReport> suite_theorem12(const AppellSeed& family, unsigned n_max, unsigned N_max,
                                            std::span<const Rational> xs) {
  std::vector<IdentityReport> out;
  for (unsigned n = 0; n <= std::min(n_max, family.order()); ++n) {
    for (unsigned N = n; N <= N_max; ++N) {
      for (const Rational& x : xs) out.push_back(theorem12_check(family, n, N, x));
    }
  }
  return out;
}

std::vector<IdentityReport> suite_gf(const Distribution& dist, unsigned n_max, std::span<const Rational> xs) {
  std::vector<IdentityReport> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned m = 0; m <= n; ++m) {
      const Polynomial poly = sy_poly(dist, n, m);
      for (const Rational& x : xs) {
        out.push_back(make_report("gf",
                                  {{"dist", dist.str()}, {"n", std::to_string(n)},
                                   {"m", std::to_string(m)}, {"x", x.str()}},
                                  sy(dist, n, m, x), sy_via_gf(dist, n, m, x), poly(x)));
      }
    }
  }
  return out;
}

std::vector<IdentityReport> suite_paths(const Distribution& dist, unsigned n_max,
                                        std::span<const Rational> xs) {
  std::vector<IdentityReport> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned m = 0; m <= n; ++m) {
      for (const Rational& x : xs) {
        const ReportParams params{{"dist", dist.str()}, {"n", std::to_string(n)},
                                  {"m", std::to_string(m)}, {"x", x.str()}};
        const Rational base = sy(dist, n, m, x);
        const Rational third = m <= kUniformRepMaxM ? sy_via_uniform_rep(dist, n, m, x)
                                                    : sy_via_gf(dist, n, m, x);
        out.push_back(make_report("paths", params, base, sy_via_factorial(dist, n, m, x), third));
        if (auto closed = sy_closed_form(dist, n, m, x)) {
          out.push_back(make_report("closed", params, base, *closed, sy_via_gf(dist, n, m, x)));
        }
      }
    }
  }
  return out;
}

std::vector<IdentityReport> suite_bernoulli_classic(unsigned n_max, unsigned N_max,
                                                    std::span<const Rational> xs) {
  std::vector<IdentityReport> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned N = 0; N <= N_max; ++N) {
      for (const Rational& x : xs) out.push_back(classical_bernoulli_check(n, N, x));
    }
  }
  return out;
}

}  // namespace probstirling
