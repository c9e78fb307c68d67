#include "probstirling/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace probstirling {

namespace {

/// Lower-triangular memo table grown row by row under a writer lock.
/// Readers copy values out, so growth never invalidates a returned value.
class Triangle {
 public:
  using Rule = Rational (*)(const std::vector<std::vector<Rational>>& rows, unsigned n, unsigned k);

  explicit Triangle(Rule rule) : rule_(rule) { rows_.push_back({Rational(1)}); }

  Rational get(unsigned n, unsigned k) {
    if (k > n) return 0;
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) {
      const auto next = static_cast<unsigned>(rows_.size());
      std::vector<Rational> row(next + 1);
      for (unsigned j = 0; j <= next; ++j) row[j] = rule_(rows_, next, j);
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  Rule rule_;
  std::shared_mutex mutex_;
  std::vector<std::vector<Rational>> rows_;
};

const Rational& entry(const std::vector<std::vector<Rational>>& rows, unsigned n, unsigned k) {
  static const Rational zero;
  return k <= n ? rows[n][k] : zero;
}

Rational stirling2_rule(const std::vector<std::vector<Rational>>& rows, unsigned n, unsigned k) {
  if (k == 0) return 0;
  return Rational(k) * entry(rows, n - 1, k) + entry(rows, n - 1, k - 1);
}

Rational stirling1_rule(const std::vector<std::vector<Rational>>& rows, unsigned n, unsigned k) {
  // s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
  const Rational lower = k == 0 ? Rational(0) : entry(rows, n - 1, k - 1);
  return lower - Rational(n - 1) * entry(rows, n - 1, k);
}

Triangle& stirling2_table() {
  static Triangle t(&stirling2_rule);
  return t;
}

Triangle& stirling1_table() {
  static Triangle t(&stirling1_rule);
  return t;
}

}  // namespace

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned n, long k) {
  if (k < 0 || k > static_cast<long>(n)) return 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, static_cast<unsigned long>(k));
  return Rational(c);
}

Rational rising_factorial(const Rational& x, unsigned n) {
  Rational acc = 1;
  for (unsigned i = 0; i < n; ++i) acc *= x + Rational(i);
  return acc;
}

Rational falling_factorial(const Rational& x, unsigned n) {
  Rational acc = 1;
  for (unsigned i = 0; i < n; ++i) acc *= x - Rational(i);
  return acc;
}

Rational stirling2(unsigned n, unsigned m) { return stirling2_table().get(n, m); }

Rational stirling2_alternating(unsigned n, unsigned m) { return stirling2_poly(n, m, 0); }

Rational stirling1(unsigned n, unsigned k) { return stirling1_table().get(n, k); }

Rational stirling2_poly(unsigned n, unsigned m, const Rational& x) {
  if (m > n) return 0;
  Rational acc;
  for (unsigned k = 0; k <= m; ++k) {
    Rational term = binomial(m, k) * (x + Rational(k)).pow(n);
    if ((m - k) % 2 == 1) term = -term;
    acc += term;
  }
  return acc / factorial(m);
}

Polynomial forward_diff(const Polynomial& p, unsigned m) {
  Polynomial q = p;
  for (unsigned i = 0; i < m && !q.is_zero(); ++i) q = q.shifted(1) - q;
  return q;
}

Rational iterated_diff(const Polynomial& p, std::span<const Rational> steps, const Rational& x) {
  Polynomial q = p;
  for (const Rational& y : steps) {
    if (q.is_zero()) break;
    q = q.shifted(y) - q;
  }
  return q(x);
}

CnNTable cnn_table(unsigned n, unsigned N) {
  const unsigned top = std::min(n, N);
  CnNTable table{n, N, std::vector<Rational>(top + 1)};
  for (unsigned k = 0; k <= top; ++k) {
    Rational acc;
    for (unsigned m = k; m <= top; ++m) {
      Rational term = binomial(N + 1, m + 1) * binomial(m, k);
      if ((m - k) % 2 == 1) term = -term;
      acc += term;
    }
    table.values[k] = acc;
  }
  return table;
}

Rational cnn_alternating(unsigned n, unsigned N, unsigned k) {
  if (N <= n) throw std::invalid_argument("cnn_alternating: requires N > n");
  if (k > n) throw std::invalid_argument("cnn_alternating: requires k <= n");
  Rational acc;
  for (unsigned i = 0; i <= N - (n + 1); ++i) acc += binomial(n + 1 + i, k) * binomial(n - k + i, n - k);
  if ((n - k) % 2 == 1) acc = -acc;
  return Rational(1) + acc;
}

Rational bell_poly(unsigned n, const Rational& x) {
  Rational acc;
  Rational xpow = 1;
  for (unsigned j = 0; j <= n; ++j) {
    acc += stirling2(n, j) * xpow;
    xpow *= x;
  }
  return acc;
}

}  // namespace probstirling
