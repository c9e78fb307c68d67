#include "probstirling/polylog.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

#include "probstirling/combinatorics.hpp"
#include "probstirling/distributions.hpp"

namespace probstirling {

namespace {

void require_unit_interval(const Rational& q) {
  if (q.sign() <= 0 || q >= Rational(1)) throw std::invalid_argument("polylog: q must lie in (0,1)");
}

}  // namespace

Rational li_neg(unsigned n, const Rational& q) {
  require_unit_interval(q);
  const Rational p = Rational(1) - q;
  if (n == 0) return q / p;
  Rational acc;
  for (unsigned r = 1; r <= n; ++r) acc += stirling2(n, r) * factorial(r) * q.pow(r) / p.pow(r + 1);
  return acc;
}

Rational li_conv_direct(unsigned n, unsigned k, const Rational& q) {
  require_unit_interval(q);
  if (k == 0) return n == 0 ? 1 : 0;

  std::vector<Rational> li(n + 1);
  for (unsigned j = 0; j <= n; ++j) li[j] = li_neg(j, q);

  // Walk weak compositions (n_1, ..., n_k) of n, accumulating
  // prod Li_{-n_i}(q) / n_i!.
  Rational total;
  std::function<void(unsigned, unsigned, Rational)> walk = [&](unsigned part, unsigned left,
                                                               Rational weight) {
    if (part + 1 == k) {
      total += weight * li[left] / factorial(left);
      return;
    }
    for (unsigned j = 0; j <= left; ++j) walk(part + 1, left - j, weight * li[j] / factorial(j));
  };
  walk(0, n, 1);
  return factorial(n) * total;
}

Rational li_conv_prob(unsigned n, unsigned k, const Rational& q) {
  require_unit_interval(q);
  const Rational p = Rational(1) - q;
  return (q / p).pow(k) * shifted_sum_moment(Distribution::geometric(q), k, n, Rational(k));
}

}  // namespace probstirling
