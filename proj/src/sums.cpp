#include "probstirling/sums.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "probstirling/appell.hpp"
#include "probstirling/gen_stirling.hpp"

namespace probstirling {

namespace {

ReportParams dist_params(const Distribution& dist, unsigned n, unsigned N, const Rational& x) {
  return {{"dist", dist.str()}, {"n", std::to_string(n)}, {"N", std::to_string(N)}, {"x", x.str()}};
}

/// E p(x + S_k), expanding p over monomials.
Rational expected_poly(const Polynomial& p, const Distribution& dist, unsigned k, const Rational& x) {
  Rational acc;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    if (p.coeffs()[j].is_zero()) continue;
    acc += p.coeffs()[j] * shifted_sum_moment(dist, k, static_cast<unsigned>(j), x);
  }
  return acc;
}

}  // namespace

const CnNTable& cached_cnn(unsigned n, unsigned N) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, CnNTable> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({n, N});
  if (it == cache.end()) it = cache.emplace(std::pair{n, N}, cnn_table(n, N)).first;
  return it->second;
}

Rational sum_direct(const Distribution& dist, unsigned n, unsigned N, const Rational& x) {
  Rational acc;
  for (unsigned k = 0; k <= N; ++k) acc += shifted_sum_moment(dist, k, n, x);
  return acc;
}

Rational sum_via_stirling(const Distribution& dist, unsigned n, unsigned N, const Rational& x) {
  Rational acc;
  for (unsigned m = 0; m <= std::min(n, N); ++m) {
    acc += binomial(N + 1, m + 1) * factorial(m) * sy(dist, n, m, x);
  }
  return acc;
}

Rational sum_via_cnn(const Distribution& dist, unsigned n, unsigned N, const Rational& x) {
  const CnNTable& c = cached_cnn(n, N);
  Rational acc;
  for (unsigned k = 0; k < c.values.size(); ++k) acc += c.values[k] * shifted_sum_moment(dist, k, n, x);
  return acc;
}

IdentityReport corollary8_check(const Distribution& dist, unsigned n, unsigned N, const Rational& x) {
  return make_report("corollary8", dist_params(dist, n, N, x), sum_direct(dist, n, N, x),
                     sum_via_stirling(dist, n, N, x), sum_via_cnn(dist, n, N, x));
}

IdentityReport sum_poly(const Polynomial& p, const Distribution& dist, unsigned N, const Rational& x) {
  if (p.is_zero()) throw std::invalid_argument("sum_poly: zero polynomial");
  const auto d = static_cast<unsigned>(p.degree());
  const unsigned top = std::min(d, N);

  std::vector<Rational> values(N + 1);
  for (unsigned k = 0; k <= N; ++k) values[k] = expected_poly(p, dist, k, x);

  Rational lhs;
  for (const Rational& v : values) lhs += v;

  Rational middle;
  for (unsigned m = 0; m <= top; ++m) {
    Rational diff;
    for (unsigned k = 0; k <= m; ++k) {
      Rational t = binomial(m, k) * values[k];
      diff += (m - k) % 2 == 1 ? -t : t;
    }
    middle += binomial(N + 1, m + 1) * diff;
  }

  const CnNTable& c = cached_cnn(d, N);
  Rational rhs;
  for (unsigned k = 0; k <= top; ++k) rhs += c.values[k] * values[k];

  return make_report("sum_poly",
                     {{"p", p.str()}, {"dist", dist.str()}, {"N", std::to_string(N)}, {"x", x.str()}},
                     lhs, middle, rhs);
}

IdentityReport classical_bernoulli_check(unsigned n, unsigned N, const Rational& x) {
  Rational lhs;
  for (unsigned k = 0; k <= N; ++k) lhs += (x + Rational(k)).pow(n);

  Rational middle;
  for (unsigned m = 0; m <= std::min(n, N); ++m) {
    middle += binomial(N + 1, m + 1) * factorial(m) * stirling2_poly(n, m, x);
  }

  const AppellSequence bernoulli{bernoulli_seed(n + 1)};
  const Polynomial b = appell_poly(bernoulli, n + 1);
  const Rational rhs = (b(x + Rational(N + 1)) - b(x)) / Rational(n + 1);

  return make_report("bernoulli-classic",
                     {{"n", std::to_string(n)}, {"N", std::to_string(N)}, {"x", x.str()}}, lhs,
                     middle, rhs);
}

std::vector<IdentityReport> verify_corollary8(const Distribution& dist, unsigned n_max,
                                              unsigned N_max, std::span<const Rational> xs) {
  std::vector<IdentityReport> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned N = 0; N <= N_max; ++N) {
      for (const Rational& x : xs) out.push_back(corollary8_check(dist, n, N, x));
    }
  }
  return out;
}

}  // namespace probstirling
