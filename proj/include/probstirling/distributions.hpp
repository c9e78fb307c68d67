#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "probstirling/rational.hpp"

namespace probstirling {

// Every member of the catalog has a finite moment generating function in a
// neighbourhood of zero and exactly rational moments:
//   Constant, Bernoulli, FiniteSupport   bounded support
//   Poisson, Geometric                   E e^{rY} finite for all r / for r < -ln q
//   Exponential, UniformTimesExponential E e^{rY} finite for r < 1
//   Uniform01                            bounded support
//   StdNormal                            E e^{rY} = e^{r^2/2}
//   Shifted                              inherits from its base
enum class DistributionKind {
  Constant,
  Bernoulli,
  Poisson,
  Geometric,
  Exponential,
  Uniform01,
  StdNormal,
  UniformTimesExponential,
  FiniteSupport,
  Shifted,
};

struct Atom {
  Rational value;
  Rational prob;
};

/// Descriptor of a catalog random variable Y with rational parameters.
class Distribution {
 public:
  static Distribution constant(const Rational& alpha);
  /// P(Y=1) = p, P(Y=0) = 1-p; requires 0 < p <= 1.
  static Distribution bernoulli(const Rational& p);
  /// Requires lambda >= 0.
  static Distribution poisson(const Rational& lambda);
  /// P(Y=j) = (1-q) q^j on j = 0, 1, ...; requires 0 < q < 1.
  static Distribution geometric(const Rational& q);
  /// Unit-rate exponential.
  static Distribution exponential();
  static Distribution uniform01();
  static Distribution std_normal();
  /// Y = U T with U uniform on [0,1] and T unit exponential, independent.
  static Distribution uniform_times_exponential();
  /// Probabilities must be positive and sum to 1.
  static Distribution finite_support(std::vector<Atom> atoms);
  /// Y = base + c.
  static Distribution shifted(const Distribution& base, const Rational& c);

  /// CLI syntax: const:a, bernoulli:p, poisson:l, geom:q, exp, uniform,
  /// normal, ut, finite:v1:p1,v2:p2,..., shift:c:<base>.
  /// Throws std::invalid_argument on bad syntax or parameters.
  static Distribution parse(std::string_view text);

  DistributionKind kind() const { return kind_; }
  /// alpha, p, lambda, q, or the shift c; zero for parameterless kinds.
  const Rational& parameter() const { return param_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  /// Underlying law of a Shifted distribution.
  const Distribution& base() const;

  /// Canonical CLI spelling; parse(str()) reproduces the distribution.
  const std::string& str() const { return key_; }

  friend bool operator==(const Distribution& a, const Distribution& b) { return a.key_ == b.key_; }

 private:
  Distribution(DistributionKind kind, Rational param);
  void build_key();

  DistributionKind kind_;
  Rational param_;
  std::vector<Atom> atoms_;
  std::shared_ptr<const Distribution> base_;
  std::string key_;
};

/// Raw moments E[Y^n] and partial-sum moments E[S_k^n] for one distribution,
/// memoized. Safe for concurrent use; caches only grow.
class MomentSequence {
 public:
  explicit MomentSequence(Distribution dist);
  ~MomentSequence();
  MomentSequence(const MomentSequence&) = delete;
  MomentSequence& operator=(const MomentSequence&) = delete;

  const Distribution& distribution() const { return dist_; }
  Rational moment(unsigned n) const;
  Rational sum_moment(unsigned k, unsigned n) const;

 private:
  struct State;
  Distribution dist_;
  std::unique_ptr<State> state_;
};

/// Shared memoized sequence for dist (process-wide, keyed by dist.str()).
const MomentSequence& moment_sequence(const Distribution& dist);

/// Exact E[Y^n] from the per-kind closed form, without memoization.
Rational exact_moment(const Distribution& dist, unsigned n);

/// Memoized E[Y^n].
Rational moment(const Distribution& dist, unsigned n);

/// E[S_k^n] with S_k = Y_1 + ... + Y_k i.i.d. and S_0 = 0. Memoized.
Rational sum_moment(const Distribution& dist, unsigned k, unsigned n);

/// E[(x + S_k)^n].
Rational shifted_sum_moment(const Distribution& dist, unsigned k, unsigned n, const Rational& x);

/// E[S_k^j] for j = 0..n_max by k-fold binomial convolution of exact_moment,
/// sharing nothing with the memoized tables.
std::vector<Rational> sum_moment_row(const Distribution& dist, unsigned k, unsigned n_max);

}  // namespace probstirling
