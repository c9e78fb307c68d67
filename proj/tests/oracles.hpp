#pragma once

// Independent reference computations used only by the tests. None of these
// call into the code paths they are used to check.

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "probstirling/polynomial.hpp"
#include "probstirling/rational.hpp"

namespace oracle {

using probstirling::Polynomial;
using probstirling::Rational;

inline Rational fact(unsigned n) {
  Rational f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= Rational(i);
  return f;
}

inline Rational choose(unsigned n, unsigned k) {
  if (k > n) return 0;
  return fact(n) / (fact(k) * fact(n - k));
}

/// Number of partitions of {0..n-1} into exactly m nonempty blocks, by
/// enumerating restricted growth strings.
inline std::uint64_t count_set_partitions(unsigned n, unsigned m) {
  if (n == 0) return m == 0 ? 1 : 0;
  std::uint64_t count = 0;
  std::vector<unsigned> a(n, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned blocks) {
    if (i == n) {
      if (blocks == m) ++count;
      return;
    }
    for (unsigned b = 0; b <= blocks && b < m; ++b) {
      a[i] = b;
      rec(i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rec(0, 0);
  return count;
}

/// Coefficients of x(x-1)...(x-n+1) by repeated multiplication of
/// plain coefficient vectors.
inline std::vector<Rational> falling_coeffs(unsigned n) {
  std::vector<Rational> c{Rational(1)};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Rational> next(c.size() + 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= Rational(i) * c[j];
    }
    c = std::move(next);
  }
  return c;
}

inline Rational eval(const std::vector<Rational>& c, const Rational& x) {
  Rational acc;
  Rational xp = 1;
  for (const auto& v : c) {
    acc += v * xp;
    xp *= x;
  }
  return acc;
}

/// Iterated difference by the subset expansion
/// sum_{S subset of steps} (-1)^{m-|S|} p(x + sum_{i in S} y_i).
inline Rational subset_expansion(const Polynomial& p, const std::vector<Rational>& ys, const Rational& x) {
  const std::size_t m = ys.size();
  Rational acc;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Rational shift;
    unsigned bits = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        shift += ys[i];
        ++bits;
      }
    }
    Rational v = eval(p.coeffs(), x + shift);
    acc += (m - bits) % 2 == 1 ? -v : v;
  }
  return acc;
}

/// E (U_1 + ... + U_m)^d for i.i.d. uniforms on [0,1], by multinomial
/// expansion with E U^a = 1/(a+1).
inline Rational uniform_sum_moment(unsigned m, unsigned d) {
  if (m == 0) return d == 0 ? 1 : 0;
  Rational total;
  std::function<void(unsigned, unsigned, Rational)> rec = [&](unsigned j, unsigned left, Rational w) {
    if (j + 1 == m) {
      total += w / (fact(left) * Rational(left + 1));
      return;
    }
    for (unsigned a = 0; a <= left; ++a) rec(j + 1, left - a, w / (fact(a) * Rational(a + 1)));
  };
  rec(0, d, 1);
  return fact(d) * total;
}

/// Li_{-n}(q) as numerator(q) / (1-q)^{n+1}, built by applying q d/dq to
/// q/(1-q) n times on the rational function directly.
struct RationalFunction {
  std::vector<Rational> numerator;
  unsigned denominator_power;
  Rational operator()(const Rational& q) const {
    return eval(numerator, q) / (Rational(1) - q).pow(denominator_power);
  }
};

inline RationalFunction polylog_by_differentiation(unsigned n) {
  RationalFunction f{{Rational(0), Rational(1)}, 1};
  for (unsigned step = 0; step < n; ++step) {
    // q d/dq [P / (1-q)^a] = q (P' (1-q) + a P) / (1-q)^{a+1}
    const auto& P = f.numerator;
    const unsigned a = f.denominator_power;
    std::vector<Rational> inner(P.size() + 1);
    for (std::size_t j = 1; j < P.size(); ++j) {
      const Rational d = Rational(j) * P[j];  // coefficient of q^{j-1} in P'
      inner[j - 1] += d;
      inner[j] -= d;
    }
    for (std::size_t j = 0; j < P.size(); ++j) inner[j] += Rational(a) * P[j];
    std::vector<Rational> shifted(inner.size() + 1);
    for (std::size_t j = 0; j < inner.size(); ++j) shifted[j + 1] = inner[j];
    f = {shifted, a + 1};
  }
  return f;
}

/// Random rational num/den with |num| <= num_max, 1 <= den <= den_max.
inline Rational random_rational(std::mt19937_64& rng, long num_max, long den_max) {
  std::uniform_int_distribution<long> num(-num_max, num_max);
  std::uniform_int_distribution<long> den(1, den_max);
  return Rational(num(rng), den(rng));
}

}  // namespace oracle
