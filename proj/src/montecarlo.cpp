#include "probstirling/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace probstirling {

namespace {

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// A distribution flattened to doubles once per estimate, so the sampling loop
// never touches rational arithmetic.
struct Plan {
  DistributionKind kind = DistributionKind::Constant;
  double shift = 0;   // accumulated Shifted offsets
  double param = 0;   // constant value, Bernoulli p, Poisson lambda
  double aux = 0;     // e^{-lambda} for Poisson, 1/ln q for Geometric
  std::vector<double> cdf;
  std::vector<double> values;

  explicit Plan(const Distribution& dist) {
    const Distribution* d = &dist;
    while (d->kind() == DistributionKind::Shifted) {
      shift += d->parameter().to_double();
      d = &d->base();
    }
    kind = d->kind();
    switch (kind) {
      case DistributionKind::Constant:
      case DistributionKind::Bernoulli: param = d->parameter().to_double(); break;
      case DistributionKind::Poisson:
        param = d->parameter().to_double();
        aux = std::exp(-param);
        break;
      case DistributionKind::Geometric: aux = 1.0 / std::log(d->parameter().to_double()); break;
      case DistributionKind::FiniteSupport: {
        Rational acc;
        for (const Atom& a : d->atoms()) {
          acc += a.prob;
          cdf.push_back(acc.to_double());
          values.push_back(a.value.to_double());
        }
        break;
      }
      default: break;
    }
  }
};

class Sampler {
 public:
  Sampler(Xoshiro256& rng, const Plan& plan) : rng_(rng), plan_(plan) {}

  double draw() { return base() + plan_.shift; }

 private:
  double base() {
    switch (plan_.kind) {
      case DistributionKind::Constant: return plan_.param;
      case DistributionKind::Bernoulli: return uniform() <= plan_.param ? 1.0 : 0.0;
      case DistributionKind::Poisson: return poisson();
      case DistributionKind::Geometric: return std::floor(std::log(uniform()) * plan_.aux);
      case DistributionKind::Exponential: return -std::log(uniform());
      case DistributionKind::Uniform01: return uniform();
      case DistributionKind::StdNormal: return normal();
      case DistributionKind::UniformTimesExponential: {
        const double u = uniform();
        return u * -std::log(uniform());
      }
      case DistributionKind::FiniteSupport: {
        const double u = uniform();
        for (std::size_t i = 0; i + 1 < plan_.cdf.size(); ++i) {
          if (u <= plan_.cdf[i]) return plan_.values[i];
        }
        return plan_.values.back();
      }
      case DistributionKind::Shifted: break;  // unwrapped by Plan
    }
    return std::numeric_limits<double>::quiet_NaN();
  }

  double uniform() { return rng_.uniform_open_closed(); }

  // Inversion by sequential search.
  double poisson() {
    const double u = uniform();
    double p = plan_.aux;
    double cdf = p;
    unsigned j = 0;
    while (u > cdf && p > 0) {
      ++j;
      p *= plan_.param / j;
      cdf += p;
    }
    return j;
  }

  // Box-Muller; the second variate of each pair is kept for the next call.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double theta = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  Xoshiro256& rng_;
  const Plan& plan_;
  double spare_ = 0;
  bool has_spare_ = false;
};

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& word : s_) {
    word = splitmix64(x);
    x += 0x9e3779b97f4a7c15ULL;
  }
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform_open_closed() {
  return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

SampleEstimate estimate_sum_moment(const Distribution& dist, unsigned k, unsigned n,
                                   std::uint64_t samples, std::uint64_t seed) {
  const std::uint64_t stream =
      splitmix64(splitmix64(splitmix64(seed) ^ fnv1a(dist.str())) ^ ((std::uint64_t{k} << 32) | n));
  Xoshiro256 rng(stream);
  const Plan plan(dist);
  Sampler sampler(rng, plan);

  // Welford running mean and sum of squared deviations.
  long double mean = 0;
  long double m2 = 0;
  for (std::uint64_t i = 1; i <= samples; ++i) {
    double s = 0;
    for (unsigned j = 0; j < k; ++j) s += sampler.draw();
    long double value = 1;
    for (unsigned j = 0; j < n; ++j) value *= s;
    const long double delta = value - mean;
    mean += delta / static_cast<long double>(i);
    m2 += delta * (value - mean);
  }

  SampleEstimate est;
  est.mean = static_cast<double>(mean);
  est.samples = samples;
  est.seed = seed;
  if (samples > 1) {
    const long double var = m2 / static_cast<long double>(samples - 1);
    est.stderr_ = static_cast<double>(std::sqrt(var / static_cast<long double>(samples)));
  }
  return est;
}

MomentCheck run_moment_check(const Distribution& dist, unsigned k, unsigned n, std::uint64_t samples,
                             std::uint64_t seed, double z) {
  MomentCheck check{sum_moment(dist, k, n), estimate_sum_moment(dist, k, n, samples, seed), false};
  const double exact = check.exact.to_double();
  // Rounding slack so degenerate (zero-variance) laws compare equal.
  const double ulps = 64 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(exact));
  check.pass = std::fabs(check.estimate.mean - exact) <= z * check.estimate.stderr_ + ulps;
  return check;
}

bool check_moment(const Distribution& dist, unsigned k, unsigned n, std::uint64_t samples,
                  std::uint64_t seed, double z) {
  return run_moment_check(dist, k, n, samples, seed, z).pass;
}

}  // namespace probstirling
