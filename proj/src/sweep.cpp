#include "bilateral/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <numbers>
#include <optional>
#include <random>
#include <thread>

#include "bilateral/errors.hpp"
#include "bilateral/report_json.hpp"

namespace bilateral {

namespace {

constexpr int kMaxDraws = 100;

struct SymbolSpec {
  std::string name;
  bool integer = false;
  bool optional = false;
};

std::vector<SymbolSpec> symbol_specs(std::string_view id) {
  if (id == identity::kBinomialTheorem) return {{"n", true}, {"x", true}};
  if (id == identity::kVandermondeExact) return {{"n", true}, {"m", true}, {"p", true}};
  if (id == identity::kBilateralBinomial) return {{"x"}, {"y"}, {"z_arg", false, true}};
  if (id == identity::kGauss2H2) return {{"a"}, {"b"}, {"c"}, {"d"}, {"excess", false, true}};
  if (id == identity::kBilateralVandermonde) return {{"n"}, {"p"}, {"K"}, {"M0"}};
  return {{"n"}, {"p"}, {"K"}, {"M"}};
}

using Draw = std::map<std::string, double>;

double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

double sample(std::mt19937_64& gen, const Interval& range, bool integer) {
  const double u = uniform01(gen);
  if (!integer) return range.lo + u * (range.hi - range.lo);
  const double lo = std::ceil(range.lo), hi = std::floor(range.hi);
  return std::min(hi, lo + std::floor(u * (hi - lo + 1.0)));
}

// Lattice and convergence margins for each identity.
bool admissible(std::string_view id, const Draw& v, const SweepConfig& cfg) {
  const double lat = cfg.lattice_margin;
  const double conv = cfg.convergence_margin;
  auto off_integers = [lat](std::initializer_list<double> xs) {
    return std::all_of(xs.begin(), xs.end(), [lat](double x) { return integer_lattice_distance(x) >= lat; });
  };
  auto off_poles = [lat](std::initializer_list<double> xs) {
    return std::all_of(xs.begin(), xs.end(), [lat](double x) { return pole_lattice_distance(x) >= lat; });
  };

  if (id == identity::kBinomialTheorem) return v.at("n") >= 0;
  if (id == identity::kVandermondeExact) return v.at("n") >= 0 && v.at("p") >= 0 && v.at("p") <= v.at("n");
  if (id == identity::kBilateralBinomial) {
    const double x = v.at("x"), y = v.at("y");
    const Complex z = unit_circle(v.at("z_arg"));
    return x > -1.0 + conv && std::abs(z + 1.0) > lat && off_integers({y, x - y});
  }
  if (id == identity::kGauss2H2) {
    const double a = v.at("a"), b = v.at("b"), c = v.at("c"), d = v.at("d");
    const double excess = c + d - a - b - 1.0;
    if (excess < conv) return false;
    if (auto it = cfg.ranges.find("excess"); it != cfg.ranges.end())
      if (excess < it->second.lo || excess > it->second.hi) return false;
    return off_integers({a, b, c, d}) &&
           off_poles({c, d, 1.0 - a, 1.0 - b, excess, c - a, d - a, c - b, d - b});
  }
  const bool convolution = id == identity::kBilateralVandermonde;
  const double n = v.at("n"), p = v.at("p"), K = v.at("K"), M = v.at(convolution ? "M0" : "M");
  return n > -1.0 + conv && off_poles({n + 1.0, n - p + 1.0, p + 1.0}) &&
         off_integers({K - M, n - p - K + M, M, p - M});
}

std::vector<Parameter> as_inputs(std::string_view id, const Draw& v) {
  std::vector<Parameter> out;
  for (const auto& spec : symbol_specs(id)) {
    if (spec.optional) continue;
    if (spec.integer)
      out.push_back({spec.name, static_cast<std::int64_t>(v.at(spec.name))});
    else
      out.push_back({spec.name, v.at(spec.name)});
  }
  return out;
}

IdentityReport evaluate(std::string_view id, const Draw& v, const SweepConfig& cfg) {
  const auto& policy = cfg.policy;
  const double tol = cfg.tolerance;
  auto as_int = [&](const char* name) { return static_cast<std::int64_t>(v.at(name)); };
  if (id == identity::kBinomialTheorem) {
    const std::int64_t x = as_int("x");
    auto report = verify_binomial_theorem(as_int("n"), std::span<const std::int64_t>(&x, 1));
    report.inputs.push_back({"x", x});
    return report;
  }
  if (id == identity::kVandermondeExact) return verify_vandermonde_exact({as_int("n"), as_int("m"), as_int("p")});
  if (id == identity::kBilateralBinomial)
    return verify_bilateral_binomial(v.at("x"), v.at("y"), unit_circle(v.at("z_arg")), policy, tol);
  if (id == identity::kGauss2H2) return verify_gauss_2h2({v.at("a"), v.at("b"), v.at("c"), v.at("d")}, policy, tol);
  if (id == identity::kBilateralVandermonde)
    return verify_bilateral_vandermonde({v.at("n"), v.at("p"), v.at("K"), v.at("M0")}, policy, tol);
  return verify_vandermonde_closed_form({v.at("n"), v.at("p"), v.at("K"), v.at("M"), cfg.variant}, policy, tol);
}

IdentityReport run_case(const SweepConfig& cfg, std::int64_t index) {
  const auto specs = symbol_specs(cfg.identity);
  std::mt19937_64 gen(cfg.seed ^ static_cast<std::uint64_t>(index));
  std::optional<Draw> accepted;
  for (int attempt = 0; attempt < kMaxDraws && !accepted; ++attempt) {
    Draw draw;
    for (const auto& spec : specs) {
      const auto it = cfg.ranges.find(spec.name);
      if (it == cfg.ranges.end()) {
        if (spec.name == "z_arg") draw[spec.name] = 0.0;  // z = 1
        continue;
      }
      if (spec.name == "excess") continue;  // constraint only, checked in admissible()
      draw[spec.name] = sample(gen, it->second, spec.integer);
    }
    if (admissible(cfg.identity, draw, cfg)) accepted = std::move(draw);
  }
  if (!accepted)
    throw UnsatisfiableConstraintError("case " + std::to_string(index) + ": no admissible draw in " +
                                       std::to_string(kMaxDraws) + " attempts");

  try {
    auto report = evaluate(cfg.identity, *accepted, cfg);
    if (cfg.identity == identity::kBilateralBinomial && cfg.ranges.contains("z_arg"))
      report.inputs.push_back({"z_arg", accepted->at("z_arg")});
    return report;
  } catch (const Error& e) {
    IdentityReport failed;
    failed.identity = cfg.identity;
    failed.inputs = as_inputs(cfg.identity, *accepted);
    if (cfg.identity == identity::kVandermondeClosedForm)
      failed.inputs.push_back({"variant", std::string(to_string(cfg.variant))});
    failed.abs_residual = failed.rel_residual = std::numeric_limits<double>::quiet_NaN();
    failed.lhs = failed.rhs = {std::numeric_limits<double>::quiet_NaN(), 0.0};
    failed.tolerance = cfg.tolerance;
    failed.passed = false;
    failed.error = e.what();
    return failed;
  }
}

Interval parse_interval(const std::string& name, const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError("range '" + name + "' must be [lo, hi]");
  Interval out{j[0].get<double>(), j[1].get<double>()};
  if (!(out.lo <= out.hi) || !std::isfinite(out.lo) || !std::isfinite(out.hi))
    throw ConfigError("range '" + name + "' needs finite lo <= hi");
  return out;
}

void check_ranges(const SweepConfig& cfg) {
  const auto specs = symbol_specs(cfg.identity);
  for (const auto& spec : specs)
    if (!spec.optional && !cfg.ranges.contains(spec.name))
      throw ConfigError("missing range for symbol '" + spec.name + "'");
  for (const auto& [symbol, range] : cfg.ranges)
    if (std::none_of(specs.begin(), specs.end(), [&](const SymbolSpec& s) { return s.name == symbol; }))
      throw ConfigError("symbol '" + symbol + "' does not belong to " + cfg.identity);
}

}  // namespace

std::vector<std::string> sweep_symbols(std::string_view id) {
  std::vector<std::string> out;
  for (const auto& spec : symbol_specs(identity::canonical(id))) out.push_back(spec.name);
  return out;
}

SweepConfig parse_sweep_config(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("sweep config must be a JSON object");
  SweepConfig cfg;
  bool has_identity = false;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "identity") {
        cfg.identity = identity::canonical(value.get<std::string>());
        has_identity = true;
      } else if (key == "cases") {
        cfg.cases = value.get<std::int64_t>();
      } else if (key == "seed") {
        cfg.seed = value.get<std::uint64_t>();
      } else if (key == "tolerance") {
        cfg.tolerance = value.get<double>();
      } else if (key == "ranges") {
        if (!value.is_object()) throw ConfigError("ranges must be an object");
        for (const auto& [symbol, range] : value.items()) cfg.ranges[symbol] = parse_interval(symbol, range);
      } else if (key == "policy") {
        cfg.policy = policy_from_json(value);
      } else if (key == "variant") {
        cfg.variant = parse_variant(value.get<std::string>());
      } else if (key == "margins") {
        for (const auto& [name, margin] : value.items()) {
          if (name == "lattice")
            cfg.lattice_margin = margin.get<double>();
          else if (name == "convergence")
            cfg.convergence_margin = margin.get<double>();
          else
            throw ConfigError("unknown margin '" + name + "'");
        }
      } else if (key == "threads") {
        cfg.threads = value.get<unsigned>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed sweep config: ") + e.what());
  } catch (const InvalidArgumentError& e) {
    throw ConfigError(e.what());
  }
  if (!has_identity) throw ConfigError("sweep config needs an identity");
  if (cfg.cases < 1) throw ConfigError("cases must be at least 1");
  if (!(cfg.tolerance >= 0)) throw ConfigError("tolerance must be non-negative");

  check_ranges(cfg);
  return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open sweep config " + path.string());
  try {
    return parse_sweep_config(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid JSON in sweep config: ") + e.what());
  }
}

nlohmann::json to_json(const SweepConfig& cfg) {
  nlohmann::json ranges = nlohmann::json::object();
  for (const auto& [symbol, range] : cfg.ranges) ranges[symbol] = {range.lo, range.hi};
  nlohmann::json out{{"identity", cfg.identity},
                     {"cases", cfg.cases},
                     {"seed", cfg.seed},
                     {"tolerance", cfg.tolerance},
                     {"ranges", ranges},
                     {"policy", to_json(cfg.policy)},
                     {"margins", {{"lattice", cfg.lattice_margin}, {"convergence", cfg.convergence_margin}}}};
  if (cfg.identity == identity::kVandermondeClosedForm) out["variant"] = std::string(to_string(cfg.variant));
  return out;
}

nlohmann::json to_json(const SweepReport& report, bool include_timing) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : report.cases) cases.push_back(to_json(c));
  nlohmann::json out{{"config", to_json(report.config)},
                     {"cases", cases},
                     {"case_count", static_cast<std::int64_t>(report.cases.size())},
                     {"pass_count", report.pass_count},
                     {"error_count", report.error_count},
                     {"worst_rel_residual", std::isfinite(report.worst_rel_residual)
                                                ? nlohmann::json(report.worst_rel_residual)
                                                : nlohmann::json(nullptr)}};
  if (include_timing) out["runtime_seconds"] = report.runtime_seconds;
  return out;
}

SweepReport run_sweep(const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  SweepConfig cfg = config;
  cfg.identity = identity::canonical(cfg.identity);
  cfg.policy.validate();
  check_ranges(cfg);

  SweepReport report;
  report.config = cfg;
  report.cases.resize(static_cast<std::size_t>(cfg.cases));

  std::atomic<std::int64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::int64_t i = next++; i < cfg.cases && !failed; i = next++) {
      try {
        report.cases[static_cast<std::size_t>(i)] = run_case(cfg, i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!failed.exchange(true)) first_error = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(std::max<std::int64_t>(cfg.cases, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);

  for (const auto& c : report.cases) {
    report.pass_count += c.passed;
    report.error_count += c.error.has_value();
    if (c.error) {
      report.worst_rel_residual = std::numeric_limits<double>::infinity();
    } else if (!(c.rel_residual <= report.worst_rel_residual)) {
      report.worst_rel_residual = c.rel_residual;
    }
  }
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace bilateral
