// probstirling: tables, identity verification suites and Monte Carlo checks.
//
// Exit codes: 0 all checks pass, 1 an identity or statistical check failed,
// 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "probstirling/appell.hpp"
#include "probstirling/combinatorics.hpp"
#include "probstirling/gen_stirling.hpp"
#include "probstirling/montecarlo.hpp"
#include "probstirling/suites.hpp"
#include "probstirling/sums.hpp"

using namespace probstirling;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

constexpr const char* kReportSchema = "probstirling.report/1";
constexpr const char* kTableSchema = "probstirling.table/1";
constexpr const char* kMonteCarloSchema = "probstirling.mc/1";

/// Thrown for bad flag values that CLI11 cannot catch by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format;
  std::string dist = "const:1";
  unsigned n = 6;
  std::optional<unsigned> m;
  std::string x = "0";
  std::vector<std::string> xs;
  std::optional<unsigned> N;
  std::optional<unsigned> n_max;
  std::optional<unsigned> N_max;
  std::string family = "bernoulli";
  std::string q = "1/2";
  std::string lambda = "1";
  unsigned k_max = 3;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  double z = 6.0;
};

Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + flag + ": not a rational number: '" + text + "'");
  }
}

Distribution parse_dist(const std::string& text) {
  try {
    return Distribution::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--dist: ") + e.what());
  }
}

std::vector<Rational> parse_xs(const Options& o) {
  if (o.xs.empty()) return {0, 1, -1, Rational(1, 2)};
  std::vector<Rational> out;
  for (const auto& s : o.xs) out.push_back(parse_rational("x", s));
  return out;
}

// ---------------------------------------------------------------- tables

/// Writes rows either as bare CSV lines or as JSON lines keyed by column.
class TableWriter {
 public:
  TableWriter(std::string table, std::vector<std::string> columns, bool json)
      : table_(std::move(table)), columns_(std::move(columns)), json_(json) {}

  void row(const std::vector<std::string>& cells) {
    if (json_) {
      Json j;
      j["schema"] = kTableSchema;
      j["table"] = table_;
      for (std::size_t i = 0; i < cells.size(); ++i) j[columns_[i]] = cells[i];
      std::cout << j.dump() << '\n';
      return;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << cells[i];
    std::cout << '\n';
  }

 private:
  std::string table_;
  std::vector<std::string> columns_;
  bool json_;
};

int cmd_table(const std::string& kind, const Options& o) {
  const bool json = o.format == "json";
  const unsigned n = o.n;
  if (kind == "stirling2" || kind == "stirling1") {
    TableWriter w(kind, {"n", "k", "value"}, json);
    for (unsigned i = 0; i <= n; ++i) {
      for (unsigned k = 0; k <= i; ++k) {
        const Rational v = kind == "stirling2" ? stirling2(i, k) : stirling1(i, k);
        w.row({std::to_string(i), std::to_string(k), v.str()});
      }
    }
  } else if (kind == "cnn") {
    if (!o.N) throw UsageError("table cnn: --N is required");
    TableWriter w(kind, {"k", "value"}, json);
    const CnNTable t = cached_cnn(n, *o.N);
    for (unsigned k = 0; k < t.values.size(); ++k) w.row({std::to_string(k), t.values[k].str()});
  } else if (kind == "sy") {
    const Distribution d = parse_dist(o.dist);
    const Rational x = parse_rational("x", o.x);
    if (o.m && *o.m > n) throw UsageError("table sy: --m must not exceed --n");
    TableWriter w(kind, {"m", "value"}, json);
    const unsigned lo = o.m ? *o.m : 0;
    const unsigned hi = o.m ? *o.m : n;
    for (unsigned m = lo; m <= hi; ++m) w.row({std::to_string(m), sy(d, n, m, x).str()});
  } else if (kind == "bell") {
    const Rational x = parse_rational("x", o.x);
    TableWriter w(kind, {"n", "value"}, json);
    for (unsigned i = 0; i <= n; ++i) w.row({std::to_string(i), bell_poly(i, x).str()});
  }
  return 0;
}

// ---------------------------------------------------------------- verify

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_report(const std::string& suite, const IdentityReport& r, bool json) {
  if (json) {
    Json j;
    j["schema"] = kReportSchema;
    j["suite"] = suite;
    j["identity"] = r.identity;
    Json params = Json::object();
    for (const auto& [key, value] : r.params) params[key] = value;
    j["params"] = params;
    j["lhs"] = r.lhs.str();
    j["middle"] = r.middle.str();
    j["rhs"] = r.rhs.str();
    j["pass"] = r.pass;
    std::cout << j.dump() << '\n';
    return;
  }
  std::string params;
  for (const auto& [key, value] : r.params) params += (params.empty() ? "" : ";") + key + "=" + value;
  std::cout << suite << ',' << r.identity << ',' << csv_escape(params) << ',' << r.lhs << ',' << r.middle
            << ',' << r.rhs << ',' << (r.pass ? "true" : "false") << '\n';
}

std::vector<IdentityReport> run_suite(const std::string& suite, const Options& o) {
  const auto n_max = [&](unsigned def) { return o.n_max.value_or(def); };
  const auto N_max = [&](unsigned def) { return o.N_max.value_or(def); };
  const std::vector<Rational> xs = parse_xs(o);

  if (suite == "corollary8") return verify_corollary8(parse_dist(o.dist), n_max(6), N_max(15), xs);
  if (suite == "theorem1") return suite_theorem1(n_max(6), N_max(15), xs);
  if (suite == "theorem9") return suite_theorem9(n_max(6), N_max(12));
  if (suite == "theorem10") return suite_theorem10(parse_rational("lambda", o.lambda), n_max(6), N_max(12));
  if (suite == "theorem11") {
    const Rational q = parse_rational("q", o.q);
    if (q.sign() <= 0 || q >= Rational(1)) throw UsageError("--q must lie strictly between 0 and 1");
    return suite_theorem11(q, n_max(4), N_max(12));
  }
  if (suite == "theorem12") {
    const unsigned top = n_max(6);
    AppellSeed seed = [&] {
      try {
        return appell_family(o.family, top);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--family: ") + e.what());
      }
    }();
    return suite_theorem12(seed, top, N_max(12), xs);
  }
  if (suite == "gf") return suite_gf(parse_dist(o.dist), n_max(8), xs);
  if (suite == "paths") return suite_paths(parse_dist(o.dist), n_max(8), xs);
  return suite_bernoulli_classic(n_max(8), N_max(15), xs);
}

int cmd_verify(const std::string& suite, const Options& o) {
  const bool json = o.format != "csv";
  const std::vector<IdentityReport> reports = run_suite(suite, o);
  std::size_t failures = 0;
  for (const auto& r : reports) {
    print_report(suite, r, json);
    if (!r.pass) ++failures;
  }
  std::cerr << suite << ": " << reports.size() << " reports, " << failures << " failures\n";
  return failures == 0 ? 0 : kExitFailure;
}

// ---------------------------------------------------------------- mc-check

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_mc_check(const Options& o) {
  const Distribution d = parse_dist(o.dist);
  if (o.samples == 0) throw UsageError("--samples must be positive");
  const bool json = o.format == "json";
  const unsigned n_max = o.n_max.value_or(5);
  std::size_t failures = 0;
  for (unsigned k = 0; k <= o.k_max; ++k) {
    for (unsigned n = 0; n <= n_max; ++n) {
      const MomentCheck c = run_moment_check(d, k, n, o.samples, o.seed, o.z);
      if (!c.pass) ++failures;
      if (json) {
        Json j;
        j["schema"] = kMonteCarloSchema;
        j["dist"] = d.str();
        j["k"] = k;
        j["n"] = n;
        j["exact"] = c.exact.str();
        j["mean"] = format_double(c.estimate.mean);
        j["stderr"] = format_double(c.estimate.stderr_);
        j["samples"] = c.estimate.samples;
        j["seed"] = c.estimate.seed;
        j["pass"] = c.pass;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << d.str() << ',' << k << ',' << n << ',' << c.exact << ',' << format_double(c.estimate.mean)
                  << ',' << format_double(c.estimate.stderr_) << ',' << c.estimate.samples << ','
                  << c.estimate.seed << ',' << (c.pass ? "true" : "false") << '\n';
      }
    }
  }
  std::cerr << "mc-check: " << (o.k_max + 1) * (n_max + 1) << " estimates, " << failures << " failures\n";
  return failures == 0 ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact probabilistic Stirling numbers and sums of powers"};
  app.require_subcommand(1);
  Options o;
  std::string table_kind, suite;

  const std::vector<std::string> formats = {"csv", "json"};

  auto* table = app.add_subcommand("table", "Print a table of exact values");
  table->add_option("kind", table_kind, "stirling2 | stirling1 | cnn | sy | bell")
      ->required()
      ->check(CLI::IsMember({"stirling2", "stirling1", "cnn", "sy", "bell"}));
  table->add_option("--n", o.n, "Row index (triangle size for stirling tables)")->capture_default_str();
  table->add_option("--m", o.m, "Single column for sy (m <= n)");
  table->add_option("--N", o.N, "Upper summation index for cnn");
  table->add_option("--x", o.x, "Shift x as num/den")->capture_default_str();
  table->add_option("--dist", o.dist, "Distribution for sy")->capture_default_str();
  table->add_option("--format", o.format, "csv (default) or json")->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Run an identity verification suite");
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"corollary8", "theorem1", "theorem9", "theorem10", "theorem11", "theorem12", "gf",
                             "paths", "bernoulli-classic"}));
  verify->add_option("--dist", o.dist, "Distribution (corollary8, gf, paths)")->capture_default_str();
  verify->add_option("--n-max", o.n_max, "Largest power n");
  verify->add_option("--N-max", o.N_max, "Largest upper index N");
  verify->add_option("--x", o.xs, "Shift x (repeatable; default 0, 1, -1, 1/2)");
  verify->add_option("--family", o.family, "bernoulli | euler | hermite | moment:<dist>")->capture_default_str();
  verify->add_option("--q", o.q, "Geometric parameter for theorem11")->capture_default_str();
  verify->add_option("--lambda", o.lambda, "Poisson rate for theorem10")->capture_default_str();
  verify->add_option("--format", o.format, "json (default) or csv")->check(CLI::IsMember(formats));

  auto* mc = app.add_subcommand("mc-check", "Compare Monte Carlo estimates of E S_k^n with exact values");
  mc->add_option("--dist", o.dist, "Distribution")->capture_default_str();
  mc->add_option("--k-max", o.k_max, "Largest number of summands")->capture_default_str();
  mc->add_option("--n-max", o.n_max, "Largest power (default 5)");
  mc->add_option("--samples", o.samples, "Replicates per estimate")->capture_default_str();
  mc->add_option("--seed", o.seed, "Base seed")->capture_default_str();
  mc->add_option("--z", o.z, "Tolerance in standard errors")->capture_default_str()->check(CLI::PositiveNumber);
  mc->add_option("--format", o.format, "csv (default) or json")->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*table) return cmd_table(table_kind, o);
    if (*verify) return cmd_verify(suite, o);
    return cmd_mc_check(o);
  } catch (const std::exception& e) {
    // Bad flag values and domain errors from the library (q outside (0,1), ...).
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
