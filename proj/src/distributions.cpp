#include "probstirling/distributions.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "probstirling/combinatorics.hpp"
#include "probstirling/polylog.hpp"

namespace probstirling {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

[[noreturn]] void bad_syntax(std::string_view text, const std::string& why) {
  throw std::invalid_argument("bad distribution '" + std::string(text) + "': " + why);
}

}  // namespace

Distribution::Distribution(DistributionKind kind, Rational param)
    : kind_(kind), param_(std::move(param)) {}

Distribution Distribution::constant(const Rational& alpha) {
  Distribution d(DistributionKind::Constant, alpha);
  d.build_key();
  return d;
}

Distribution Distribution::bernoulli(const Rational& p) {
  if (p.sign() <= 0 || p > Rational(1)) throw std::invalid_argument("bernoulli: need 0 < p <= 1");
  Distribution d(DistributionKind::Bernoulli, p);
  d.build_key();
  return d;
}

Distribution Distribution::poisson(const Rational& lambda) {
  if (lambda.sign() < 0) throw std::invalid_argument("poisson: need lambda >= 0");
  Distribution d(DistributionKind::Poisson, lambda);
  d.build_key();
  return d;
}

Distribution Distribution::geometric(const Rational& q) {
  if (q.sign() <= 0 || q >= Rational(1)) throw std::invalid_argument("geometric: need 0 < q < 1");
  Distribution d(DistributionKind::Geometric, q);
  d.build_key();
  return d;
}

Distribution Distribution::exponential() {
  Distribution d(DistributionKind::Exponential, 0);
  d.build_key();
  return d;
}

Distribution Distribution::uniform01() {
  Distribution d(DistributionKind::Uniform01, 0);
  d.build_key();
  return d;
}

Distribution Distribution::std_normal() {
  Distribution d(DistributionKind::StdNormal, 0);
  d.build_key();
  return d;
}

Distribution Distribution::uniform_times_exponential() {
  Distribution d(DistributionKind::UniformTimesExponential, 0);
  d.build_key();
  return d;
}

Distribution Distribution::finite_support(std::vector<Atom> atoms) {
  if (atoms.empty()) throw std::invalid_argument("finite: need at least one atom");
  Rational total;
  for (const Atom& a : atoms) {
    if (a.prob.sign() <= 0) throw std::invalid_argument("finite: probabilities must be positive");
    total += a.prob;
  }
  if (total != Rational(1)) throw std::invalid_argument("finite: probabilities must sum to 1");
  Distribution d(DistributionKind::FiniteSupport, 0);
  d.atoms_ = std::move(atoms);
  d.build_key();
  return d;
}

Distribution Distribution::shifted(const Distribution& base, const Rational& c) {
  Distribution d(DistributionKind::Shifted, c);
  d.base_ = std::make_shared<const Distribution>(base);
  d.build_key();
  return d;
}

const Distribution& Distribution::base() const {
  if (!base_) throw std::logic_error("base() on a non-shifted distribution");
  return *base_;
}

void Distribution::build_key() {
  switch (kind_) {
    case DistributionKind::Constant: key_ = "const:" + param_.str(); break;
    case DistributionKind::Bernoulli: key_ = "bernoulli:" + param_.str(); break;
    case DistributionKind::Poisson: key_ = "poisson:" + param_.str(); break;
    case DistributionKind::Geometric: key_ = "geom:" + param_.str(); break;
    case DistributionKind::Exponential: key_ = "exp"; break;
    case DistributionKind::Uniform01: key_ = "uniform"; break;
    case DistributionKind::StdNormal: key_ = "normal"; break;
    case DistributionKind::UniformTimesExponential: key_ = "ut"; break;
    case DistributionKind::FiniteSupport:
      key_ = "finite:";
      for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i > 0) key_ += ",";
        key_ += atoms_[i].value.str() + ":" + atoms_[i].prob.str();
      }
      break;
    case DistributionKind::Shifted: key_ = "shift:" + param_.str() + ":" + base_->str(); break;
  }
}

Distribution Distribution::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view rest =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;

  auto no_arg = [&](Distribution d) {
    if (has_arg) bad_syntax(text, "takes no parameter");
    return d;
  };
  auto one_arg = [&]() {
    if (!has_arg || rest.empty()) bad_syntax(text, "missing parameter");
    try {
      return Rational::parse(rest);
    } catch (const std::invalid_argument& e) {
      bad_syntax(text, e.what());
    }
  };

  try {
    if (head == "exp") return no_arg(exponential());
    if (head == "uniform") return no_arg(uniform01());
    if (head == "normal") return no_arg(std_normal());
    if (head == "ut") return no_arg(uniform_times_exponential());
    if (head == "const") return constant(one_arg());
    if (head == "bernoulli") return bernoulli(one_arg());
    if (head == "poisson") return poisson(one_arg());
    if (head == "geom") return geometric(one_arg());
    if (head == "finite") {
      if (!has_arg || rest.empty()) bad_syntax(text, "missing atoms");
      std::vector<Atom> atoms;
      for (std::string_view item : split(rest, ',')) {
        const auto fields = split(item, ':');
        if (fields.size() != 2) bad_syntax(text, "atoms are value:prob");
        atoms.push_back({Rational::parse(fields[0]), Rational::parse(fields[1])});
      }
      return finite_support(std::move(atoms));
    }
    if (head == "shift") {
      const auto sep = rest.find(':');
      if (!has_arg || sep == std::string_view::npos) bad_syntax(text, "expected shift:c:<base>");
      return shifted(parse(rest.substr(sep + 1)), Rational::parse(rest.substr(0, sep)));
    }
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    if (msg.rfind("bad distribution", 0) == 0) throw;
    bad_syntax(text, msg);
  }
  bad_syntax(text, "unknown kind '" + std::string(head) + "'");
}

Rational exact_moment(const Distribution& dist, unsigned n) {
  if (n == 0) return 1;
  switch (dist.kind()) {
    case DistributionKind::Constant: return dist.parameter().pow(n);
    case DistributionKind::Bernoulli: return dist.parameter();
    case DistributionKind::Poisson: return bell_poly(n, dist.parameter());
    case DistributionKind::Geometric: {
      const Rational& q = dist.parameter();
      return (Rational(1) - q) * li_neg(n, q);
    }
    case DistributionKind::Exponential: return factorial(n);
    case DistributionKind::Uniform01: return Rational(1) / Rational(n + 1);
    case DistributionKind::StdNormal: {
      if (n % 2 == 1) return 0;
      Rational acc = 1;
      for (unsigned j = n - 1; j > 1; j -= 2) acc *= Rational(j);
      return acc;
    }
    case DistributionKind::UniformTimesExponential: return factorial(n) / Rational(n + 1);
    case DistributionKind::FiniteSupport: {
      Rational acc;
      for (const Atom& a : dist.atoms()) acc += a.prob * a.value.pow(n);
      return acc;
    }
    case DistributionKind::Shifted: {
      const Rational& c = dist.parameter();
      Rational acc;
      for (unsigned j = 0; j <= n; ++j) {
        acc += binomial(n, j) * c.pow(n - j) * exact_moment(dist.base(), j);
      }
      return acc;
    }
  }
  throw std::logic_error("exact_moment: unhandled kind");
}

struct MomentSequence::State {
  std::mutex mutex;
  std::vector<Rational> moments{Rational(1)};
  // sums[k][n] = E[S_k^n]; row 0 is [1, 0, 0, ...].
  std::vector<std::vector<Rational>> sums;

  const Rational& moment_locked(const Distribution& dist, unsigned n) {
    while (moments.size() <= n) moments.push_back(exact_moment(dist, static_cast<unsigned>(moments.size())));
    return moments[n];
  }

  void extend_row(const Distribution& dist, unsigned k, unsigned n) {
    if (sums.size() <= k) sums.resize(k + 1);
    auto& row = sums[k];
    if (row.size() > n) return;
    if (k > 0) extend_row(dist, k - 1, n);
    for (auto j = static_cast<unsigned>(row.size()); j <= n; ++j) {
      if (k == 0) {
        row.push_back(j == 0 ? 1 : 0);
        continue;
      }
      const auto& prev = sums[k - 1];
      Rational acc;
      for (unsigned i = 0; i <= j; ++i) acc += binomial(j, i) * prev[i] * moment_locked(dist, j - i);
      row.push_back(acc);
    }
  }
};

MomentSequence::MomentSequence(Distribution dist)
    : dist_(std::move(dist)), state_(std::make_unique<State>()) {}

MomentSequence::~MomentSequence() = default;

Rational MomentSequence::moment(unsigned n) const {
  std::lock_guard lock(state_->mutex);
  return state_->moment_locked(dist_, n);
}

Rational MomentSequence::sum_moment(unsigned k, unsigned n) const {
  std::lock_guard lock(state_->mutex);
  state_->extend_row(dist_, k, n);
  return state_->sums[k][n];
}

const MomentSequence& moment_sequence(const Distribution& dist) {
  static std::mutex registry_mutex;
  static std::map<std::string, std::unique_ptr<MomentSequence>, std::less<>> registry;
  std::lock_guard lock(registry_mutex);
  auto it = registry.find(dist.str());
  if (it == registry.end()) {
    it = registry.emplace(dist.str(), std::make_unique<MomentSequence>(dist)).first;
  }
  return *it->second;
}

Rational moment(const Distribution& dist, unsigned n) { return moment_sequence(dist).moment(n); }

Rational sum_moment(const Distribution& dist, unsigned k, unsigned n) {
  return moment_sequence(dist).sum_moment(k, n);
}

Rational shifted_sum_moment(const Distribution& dist, unsigned k, unsigned n, const Rational& x) {
  const MomentSequence& seq = moment_sequence(dist);
  Rational acc;
  for (unsigned j = 0; j <= n; ++j) acc += binomial(n, j) * x.pow(n - j) * seq.sum_moment(k, j);
  return acc;
}

std::vector<Rational> sum_moment_row(const Distribution& dist, unsigned k, unsigned n_max) {
  std::vector<Rational> raw(n_max + 1);
  for (unsigned j = 0; j <= n_max; ++j) raw[j] = exact_moment(dist, j);
  std::vector<Rational> row(n_max + 1);
  row[0] = 1;
  for (unsigned step = 0; step < k; ++step) {
    std::vector<Rational> next(n_max + 1);
    for (unsigned j = 0; j <= n_max; ++j) {
      for (unsigned i = 0; i <= j; ++i) next[j] += binomial(j, i) * row[i] * raw[j - i];
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace probstirling
