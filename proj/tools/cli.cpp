#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bilateral/binomial.hpp"
#include "bilateral/errors.hpp"
#include "bilateral/gamma.hpp"
#include "bilateral/identities.hpp"
#include "bilateral/report_json.hpp"
#include "bilateral/series.hpp"
#include "bilateral/sweep.hpp"

namespace bilateral::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitFailure = 2;

struct ZOptions {
  CLI::Option* re = nullptr;
  CLI::Option* im = nullptr;
  CLI::Option* arg = nullptr;
  double re_value = 1.0;
  double im_value = 0.0;
  double arg_value = 0.0;

  void attach(CLI::App* app) {
    re = app->add_option("--z-re", re_value, "real part of z");
    im = app->add_option("--z-im", im_value, "imaginary part of z");
    arg = app->add_option("--z-arg", arg_value, "z = exp(i theta) on the unit circle");
  }

  bool given() const { return re->count() + im->count() + arg->count() > 0; }

  Complex resolve() const {
    if (arg->count() > 0 && (re->count() > 0 || im->count() > 0))
      throw InvalidArgumentError("give either --z-arg or --z-re/--z-im, not both");
    if (arg->count() > 0) return unit_circle(arg_value);
    return {re_value, im_value};
  }
};

struct PolicyOptions {
  TruncationPolicy policy;
  std::string acceleration = "none";
  bool no_tail = false;

  void attach(CLI::App* app) {
    app->add_option("--tol", policy.rel_tolerance, "target relative error of the series");
    app->add_option("--max-half-width", policy.max_half_width, "cap on |nu|");
    app->add_flag("--allow-conditional", policy.allow_conditional, "sum conditionally convergent series");
    app->add_option("--acceleration", acceleration, "none | paired-aitken");
    app->add_flag("--no-tail", no_tail, "return raw partial sums without tail estimation");
  }

  TruncationPolicy resolve() const {
    TruncationPolicy p = policy;
    p.acceleration = parse_acceleration(acceleration);
    p.tail_estimation = !no_tail;
    p.validate();
    return p;
  }
};

struct VerifyOptions {
  std::string identity;
  std::map<std::string, double> values;
  std::map<std::string, CLI::Option*> options;
  std::vector<std::int64_t> x_values;
  CLI::Option* x_values_option = nullptr;
  std::string variant = "sign-corrected";
  CLI::Option* variant_option = nullptr;
  double tolerance = kDefaultCaseTolerance;
  CLI::Option* tolerance_option = nullptr;
  ZOptions z;
  PolicyOptions policy;

  void attach(CLI::App* app) {
    app->add_option("identity", identity, "identity to verify")->required();
    for (const char* name : {"n", "m", "p", "K", "M", "M0", "x", "y", "a", "b", "c", "d"})
      options[name] = app->add_option(std::string("--") + name, values[name]);
    x_values_option = app->add_option("--x-values", x_values, "comma-separated integers")->delimiter(',');
    variant_option = app->add_option("--variant", variant, "as-printed | sign-corrected");
    tolerance_option = app->add_option("--tolerance", tolerance, "pass threshold on rel_residual");
    z.attach(app);
    policy.attach(app);
  }

  // Rejects flags that do not belong to the identity and reports missing ones.
  void require(const std::set<std::string>& needed, const std::set<std::string>& optional = {}) const {
    for (const auto& [name, option] : options) {
      const bool given = option->count() > 0;
      if (needed.contains(name) && !given) throw InvalidArgumentError("missing --" + name);
      if (given && !needed.contains(name) && !optional.contains(name))
        throw InvalidArgumentError("--" + name + " does not apply to " + identity);
    }
  }

  double get(const std::string& name) const { return values.at(name); }

  std::int64_t get_integer(const std::string& name) const {
    const double v = values.at(name);
    if (v != std::floor(v) || std::abs(v) > 9e15) throw InvalidArgumentError("--" + name + " must be an integer");
    return static_cast<std::int64_t>(v);
  }
};

void require_absent(bool present, const char* flag, std::string_view identity) {
  if (present) throw InvalidArgumentError(std::string(flag) + " does not apply to " + std::string(identity));
}

IdentityReport verify(const VerifyOptions& o) {
  const std::string_view id = identity::canonical(o.identity);
  const bool series_identity = id == identity::kBilateralBinomial || id == identity::kGauss2H2 ||
                               id == identity::kBilateralVandermonde || id == identity::kVandermondeClosedForm;
  require_absent(!series_identity && o.tolerance_option->count() > 0, "--tolerance", id);
  require_absent(id != identity::kVandermondeClosedForm && o.variant_option->count() > 0, "--variant", id);
  require_absent(id != identity::kBinomialTheorem && o.x_values_option->count() > 0, "--x-values", id);
  require_absent(id != identity::kBilateralBinomial && o.z.given(), "z flags", id);

  if (id == identity::kBinomialTheorem) {
    o.require({"n"}, {"x"});
    std::vector<std::int64_t> xs = o.x_values;
    if (o.options.at("x")->count() > 0) xs.push_back(o.get_integer("x"));
    if (xs.empty()) throw InvalidArgumentError("binomial-theorem needs --x or --x-values");
    return verify_binomial_theorem(o.get_integer("n"), xs);
  }
  if (id == identity::kVandermondeExact) {
    o.require({"n", "m", "p"});
    return verify_vandermonde_exact({o.get_integer("n"), o.get_integer("m"), o.get_integer("p")});
  }
  const TruncationPolicy policy = o.policy.resolve();
  if (id == identity::kBilateralBinomial) {
    o.require({"x", "y"});
    return verify_bilateral_binomial(o.get("x"), o.get("y"), o.z.resolve(), policy, o.tolerance);
  }
  if (id == identity::kGauss2H2) {
    o.require({"a", "b", "c", "d"});
    return verify_gauss_2h2({o.get("a"), o.get("b"), o.get("c"), o.get("d")}, policy, o.tolerance);
  }
  if (id == identity::kBilateralVandermonde) {
    o.require({"n", "p", "K", "M0"});
    return verify_bilateral_vandermonde({o.get("n"), o.get("p"), o.get("K"), o.get("M0")}, policy, o.tolerance);
  }
  o.require({"n", "p", "K", "M"});
  return verify_vandermonde_closed_form(
      {o.get("n"), o.get("p"), o.get("K"), o.get("M"), parse_variant(o.variant)}, policy, o.tolerance);
}

void print_signed(std::ostream& out, bool json, const SignedLogValue& v, double value, nlohmann::json doc) {
  if (json) {
    doc["sign"] = v.sign;
    doc["log_magnitude"] = v.sign == 0 ? nlohmann::json(nullptr) : nlohmann::json(v.log_magnitude);
    doc["value"] = std::isfinite(value) ? nlohmann::json(value) : nlohmann::json(nullptr);
    out << doc.dump(2) << '\n';
  } else {
    out << format_number(value) << '\n';
  }
}

int print_series(std::ostream& out, std::ostream& err, bool json, const SeriesResult& r) {
  if (json)
    out << to_json(r).dump(2) << '\n';
  else
    out << format_complex(r.value) << '\n';
  if (!r.converged) {
    err << "error: series did not converge within max_half_width (tail estimate "
        << format_number(r.tail_estimate) << ")\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized binomial coefficients, Gamma brackets and bilateral hypergeometric series"};
  app.name("bilateral");
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "print JSON documents instead of plain values");

  auto* binom = app.add_subcommand("binom", "generalized binomial coefficient C(x, y)");
  double bx = 0, by = 0;
  binom->add_option("x", bx)->required();
  binom->add_option("y", by)->required();

  auto* ratio = app.add_subcommand("gamma-ratio", "prod Gamma(num) / prod Gamma(den)");
  std::vector<double> num, den;
  ratio->add_option("--num", num, "numerator arguments")->delimiter(',');
  ratio->add_option("--den", den, "denominator arguments")->delimiter(',');

  auto* series = app.add_subcommand("series", "bilateral pHp series");
  std::vector<double> upper, lower;
  series->add_option("--upper", upper, "upper parameters")->delimiter(',')->required();
  series->add_option("--lower", lower, "lower parameters")->delimiter(',')->required();
  ZOptions series_z;
  series_z.attach(series);
  PolicyOptions series_policy;
  series_policy.attach(series);

  auto* bbsum = app.add_subcommand("bbsum", "sum_k C(x, y+k) z^(y+k)");
  double sx = 0, sy = 0;
  bbsum->add_option("--x", sx)->required();
  bbsum->add_option("--y", sy)->required();
  ZOptions bbsum_z;
  bbsum_z.attach(bbsum);
  PolicyOptions bbsum_policy;
  bbsum_policy.attach(bbsum);

  auto* verify_cmd = app.add_subcommand("verify", "check one identity at a parameter point");
  VerifyOptions verify_options;
  verify_options.attach(verify_cmd);

  auto* sweep = app.add_subcommand("sweep", "run a seeded parameter sweep from a JSON config");
  std::string config_path, out_path;
  unsigned threads = 0;
  sweep->add_option("--config", config_path, "sweep config JSON")->required();
  sweep->add_option("--out", out_path, "write the full report here");
  sweep->add_option("--threads", threads, "worker threads (overrides the config)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const auto parsed = app.get_subcommands();
    const std::string usage = parsed.empty() ? app.get_name() + " [--json] <subcommand> ..."
                                             : app.get_name() + " " + parsed.front()->get_name() + " --help";
    err << "error: " << e.what() << " (usage: " << usage << ")\n";
    return kExitFailure;
  }

  try {
    if (binom->parsed()) {
      print_signed(out, json, binom_signed(bx, by), binom_real(bx, by), {{"x", bx}, {"y", by}});
      return kExitOk;
    }
    if (ratio->parsed()) {
      const GammaRatioSpec spec{num, den};
      print_signed(out, json, gamma_ratio(spec), gamma_ratio_value(spec), {{"numerator", num}, {"denominator", den}});
      return kExitOk;
    }
    if (series->parsed()) {
      const auto result = eval_bilateral({upper, lower, series_z.resolve()}, series_policy.resolve());
      return print_series(out, err, json, result);
    }
    if (bbsum->parsed()) {
      const auto result = bilateral_binomial_sum(sx, sy, bbsum_z.resolve(), bbsum_policy.resolve());
      return print_series(out, err, json, result);
    }
    if (verify_cmd->parsed()) {
      const auto report = verify(verify_options);
      if (json) {
        out << to_json(report).dump(2) << '\n';
      } else {
        out << (report.passed ? "PASS " : "FAIL ") << report.identity << " lhs=" << format_complex(report.lhs)
            << " rhs=" << format_complex(report.rhs) << " rel_residual=" << format_number(report.rel_residual)
            << '\n';
      }
      return report.passed ? kExitOk : kExitViolation;
    }
    if (sweep->parsed()) {
      SweepConfig cfg = load_sweep_config(config_path);
      if (threads > 0) cfg.threads = threads;
      const auto report = run_sweep(cfg);
      const auto doc = to_json(report);
      if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw ConfigError("cannot write " + out_path);
        file << doc.dump(2) << '\n';
      }
      const bool all_passed = report.pass_count == static_cast<std::int64_t>(report.cases.size());
      if (json) {
        out << doc.dump(2) << '\n';
      } else {
        out << (all_passed ? "PASS " : "FAIL ") << report.config.identity << ' ' << report.pass_count << '/'
            << report.cases.size() << " cases passed, " << report.error_count
            << " errors, worst rel_residual " << format_number(report.worst_rel_residual) << '\n';
      }
      return all_passed ? kExitOk : kExitViolation;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace bilateral::cli
