#pragma once

#include <array>
#include <cstdint>

#include "probstirling/distributions.hpp"
#include "probstirling/rational.hpp"

namespace probstirling {

/// xoshiro256** 1.0 (Blackman and Vigna), state seeded from splitmix64.
/// Output is fully determined by the seed on every platform.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform on (0, 1] with 53 random bits.
  double uniform_open_closed();

 private:
  std::array<std::uint64_t, 4> s_{};
};

/// splitmix64 finalizer, used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

struct SampleEstimate {
  double mean = 0;
  /// sample standard deviation / sqrt(samples)
  double stderr_ = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo estimate of E S_k^n from `samples` replicates. The random
/// stream is derived from (seed, dist, k, n) so each estimate is reproducible
/// on its own. Every catalog distribution is samplable.
SampleEstimate estimate_sum_moment(const Distribution& dist, unsigned k, unsigned n,
                                   std::uint64_t samples, std::uint64_t seed);

struct MomentCheck {
  Rational exact;
  SampleEstimate estimate;
  bool pass = false;
};

/// Compares the estimate with the exact sum_moment:
/// |estimate - exact| <= z * stderr (+ a few ulps for degenerate laws).
MomentCheck run_moment_check(const Distribution& dist, unsigned k, unsigned n, std::uint64_t samples,
                             std::uint64_t seed, double z = 6.0);

bool check_moment(const Distribution& dist, unsigned k, unsigned n, std::uint64_t samples,
                  std::uint64_t seed, double z = 6.0);

}  // namespace probstirling
