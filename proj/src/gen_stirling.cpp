#include "probstirling/gen_stirling.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

#include "probstirling/combinatorics.hpp"
#include "probstirling/series.hpp"

namespace probstirling {

namespace {

Rational signed_binomial(unsigned m, unsigned k) {
  Rational c = binomial(m, k);
  return (m - k) % 2 == 1 ? -c : c;
}

void require_m_le_n(unsigned n, unsigned m, const char* what) {
  if (m > n) throw std::invalid_argument(std::string(what) + ": requires m <= n");
}

}  // namespace

std::string_view to_string(GenStirlingPath path) {
  switch (path) {
    case GenStirlingPath::AlternatingSum: return "alternating";
    case GenStirlingPath::GeneratingFunction: return "gf";
    case GenStirlingPath::UniformRepresentation: return "uniform-rep";
    case GenStirlingPath::FactorialMoments: return "factorial";
    case GenStirlingPath::ClosedForm: return "closed";
  }
  return "?";
}

Rational sy(const Distribution& dist, unsigned n, unsigned m, const Rational& x) {
  if (m > n) return 0;
  Rational acc;
  for (unsigned k = 0; k <= m; ++k) acc += signed_binomial(m, k) * shifted_sum_moment(dist, k, n, x);
  return acc / factorial(m);
}

Polynomial sy_poly(const Distribution& dist, unsigned n, unsigned m) {
  require_m_le_n(n, m, "sy_poly");
  // Coefficient of x^{n-j} is C(n,j)/m! sum_k C(m,k)(-1)^{m-k} E S_k^j.
  std::vector<Rational> coeffs(n + 1);
  const Rational inv_mfact = factorial(m).inverse();
  for (unsigned j = 0; j <= n; ++j) {
    Rational diff;
    for (unsigned k = 0; k <= m; ++k) diff += signed_binomial(m, k) * sum_moment(dist, k, j);
    coeffs[n - j] = binomial(n, j) * diff * inv_mfact;
  }
  return Polynomial(std::move(coeffs));
}

Rational sy_via_gf(const Distribution& dist, unsigned n, unsigned m, const Rational& x) {
  const EGFSeries mgf_minus_one = series_from_moments(dist, n) - EGFSeries::constant(n, 1);
  EGFSeries f = series_mul(series_exp_scaled(n, x), series_pow(mgf_minus_one, m));
  f *= factorial(m).inverse();
  return egf_coefficient(f, n);
}

Rational sy_via_uniform_rep(const Distribution& dist, unsigned n, unsigned m, const Rational& x,
                            unsigned max_m) {
  require_m_le_n(n, m, "sy_via_uniform_rep");
  if (m > max_m) throw std::invalid_argument("sy_via_uniform_rep: m exceeds cap");
  const unsigned d = n - m;

  // E[Y^{a+1}] E[U^a] = E[Y^{a+1}] / (a+1) for each of the m factors.
  std::vector<Rational> factor(d + 1);
  for (unsigned a = 0; a <= d; ++a) factor[a] = exact_moment(dist, a + 1) / Rational(a + 1);

  // sum over (a_0, a_1..a_m), sum = d, of d!/(a_0!...a_m!) x^{a_0} prod_j factor[a_j]
  Rational total;
  std::function<void(unsigned, unsigned, Rational)> walk = [&](unsigned j, unsigned left,
                                                               Rational weight) {
    if (j == m) {
      total += weight * x.pow(left) / factorial(left);
      return;
    }
    for (unsigned a = 0; a <= left; ++a) walk(j + 1, left - a, weight * factor[a] / factorial(a));
  };
  walk(0, d, 1);
  return binomial(n, m) * factorial(d) * total;
}

Rational sy_via_factorial(const Distribution& dist, unsigned n, unsigned m, const Rational& x) {
  if (m > n) return 0;
  Rational outer;
  for (unsigned k = 0; k <= m; ++k) {
    const std::vector<Rational> row = sum_moment_row(dist, k, n);
    // power[j] = E (x + S_k)^j
    std::vector<Rational> power(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
      for (unsigned l = 0; l <= j; ++l) power[j] += binomial(j, l) * x.pow(j - l) * row[l];
    }
    Rational inner;
    for (unsigned i = 0; i <= n; ++i) {
      Rational falling;
      for (unsigned j = 0; j <= i; ++j) falling += stirling1(i, j) * power[j];
      inner += stirling2(n, i) * falling;
    }
    outer += signed_binomial(m, k) * inner;
  }
  return outer / factorial(m);
}

Rational sy_closed_exponential(unsigned n, unsigned m) {
  require_m_le_n(n, m, "sy_closed_exponential");
  return binomial(n, m) * rising_factorial(Rational(m), n - m);
}

Rational sy_closed_poisson(unsigned n, unsigned m, const Rational& lambda) {
  require_m_le_n(n, m, "sy_closed_poisson");
  Rational acc;
  for (unsigned r = m; r <= n; ++r) acc += stirling2(n, r) * stirling2(r, m) * lambda.pow(r);
  return acc;
}

Rational sy_closed_geometric_shifted(unsigned n, unsigned m, const Rational& q) {
  require_m_le_n(n, m, "sy_closed_geometric_shifted");
  if (q.sign() <= 0 || q >= Rational(1)) {
    throw std::invalid_argument("sy_closed_geometric_shifted: need 0 < q < 1");
  }
  const Rational ratio = q / (Rational(1) - q);
  Rational acc;
  for (unsigned r = m; r <= n; ++r) {
    acc += binomial(r, m) * rising_factorial(Rational(m), r - m) * stirling2(n, r) * ratio.pow(r);
  }
  return acc / q.pow(m);
}

Rational sy_closed_normal(unsigned n_power, unsigned m) {
  if (n_power % 2 == 1) return 0;
  const unsigned half = n_power / 2;
  Rational v = hermite_at_zero(n_power) * stirling2(half, m);
  return half % 2 == 1 ? -v : v;
}

Rational sy_closed_uniform(unsigned n, unsigned m) {
  require_m_le_n(n, m, "sy_closed_uniform");
  Rational acc;
  for (unsigned k = 0; k <= m; ++k) {
    Rational term = binomial(n + m, n + k) * stirling2(n + k, k);
    if ((m - k) % 2 == 1) term = -term;
    acc += term;
  }
  return factorial(n) / factorial(n + m) * acc;
}

Rational sy_closed_ut(unsigned n, unsigned m) {
  require_m_le_n(n, m, "sy_closed_ut");
  Rational acc;
  for (unsigned k = 0; k <= m; ++k) {
    Rational term = binomial(n + m, n + k) * stirling1(n + k, k);
    if ((m - k) % 2 == 1) term = -term;
    acc += term;
  }
  Rational v = factorial(n) / factorial(n + m) * acc;
  return n % 2 == 1 ? -v : v;
}

Rational whitney(const Rational& alpha, unsigned n, unsigned m, const Rational& x) {
  if (alpha.is_zero()) throw std::invalid_argument("whitney: alpha must be nonzero");
  return sy(Distribution::constant(alpha), n, m, x) / alpha.pow(m);
}

Rational hermite_at_zero(unsigned n) {
  if (n % 2 == 1) return 0;
  Rational acc = 1;
  for (unsigned j = n - 1; n > 0 && j > 1; j -= 2) acc *= Rational(j);
  return (n / 2) % 2 == 1 ? -acc : acc;
}

std::optional<Rational> sy_closed_form(const Distribution& dist, unsigned n, unsigned m,
                                       const Rational& x) {
  if (m > n) return Rational(0);
  const bool at_zero = x.is_zero();
  switch (dist.kind()) {
    case DistributionKind::Constant: {
      // (x + k alpha)^n = alpha^n (x/alpha + k)^n
      const Rational& alpha = dist.parameter();
      if (alpha.is_zero()) return m == 0 ? x.pow(n) : Rational(0);
      return alpha.pow(n) * stirling2_poly(n, m, x / alpha);
    }
    case DistributionKind::Bernoulli: return dist.parameter().pow(m) * stirling2_poly(n, m, x);
    case DistributionKind::Exponential:
      if (at_zero) return sy_closed_exponential(n, m);
      break;
    case DistributionKind::Poisson:
      if (at_zero) return sy_closed_poisson(n, m, dist.parameter());
      break;
    case DistributionKind::StdNormal:
      if (at_zero) return sy_closed_normal(n, m);
      break;
    case DistributionKind::Uniform01:
      if (at_zero) return sy_closed_uniform(n, m);
      break;
    case DistributionKind::UniformTimesExponential:
      if (at_zero) return sy_closed_ut(n, m);
      break;
    case DistributionKind::Shifted:
      if (at_zero && dist.parameter() == Rational(1) &&
          dist.base().kind() == DistributionKind::Geometric) {
        return sy_closed_geometric_shifted(n, m, dist.base().parameter());
      }
      break;
    default: break;
  }
  return std::nullopt;
}

GenStirlingResult sy_by_path(const Distribution& dist, unsigned n, unsigned m, const Rational& x,
                             GenStirlingPath path) {
  switch (path) {
    case GenStirlingPath::AlternatingSum: return {sy(dist, n, m, x), path};
    case GenStirlingPath::GeneratingFunction: return {sy_via_gf(dist, n, m, x), path};
    case GenStirlingPath::UniformRepresentation:
      if (m > n) return {Rational(0), path};
      return {sy_via_uniform_rep(dist, n, m, x), path};
    case GenStirlingPath::FactorialMoments: return {sy_via_factorial(dist, n, m, x), path};
    case GenStirlingPath::ClosedForm: {
      auto v = sy_closed_form(dist, n, m, x);
      if (!v) throw std::invalid_argument("no closed form for " + dist.str() + " at x = " + x.str());
      return {*v, path};
    }
  }
  throw std::logic_error("sy_by_path: unhandled path");
}

}  // namespace probstirling
