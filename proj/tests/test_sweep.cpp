#include "doctest.h"

#include "bilateral/errors.hpp"
#include "bilateral/sweep.hpp"

using namespace bilateral;
using nlohmann::json;

namespace {

SweepConfig gauss_config(std::int64_t cases) {
  json j = json::parse(R"({
    "identity": "gauss-2h2", "seed": 42, "tolerance": 1e-6,
    "ranges": {"a": [-1, 1], "b": [-1, 1], "c": [0.2, 3.5], "d": [0.2, 3.5], "excess": [1, 3]}
  })");
  j["cases"] = cases;
  return parse_sweep_config(j);
}

}  // namespace

TEST_CASE("single fixed exact case") {
  const SweepConfig cfg = parse_sweep_config(json::parse(R"({
    "identity": "vandermonde-exact", "cases": 1, "seed": 7,
    "ranges": {"n": [5, 5], "m": [2, 2], "p": [2, 2]}
  })"));
  const SweepReport r = run_sweep(cfg);
  REQUIRE(r.cases.size() == 1);
  CHECK(r.pass_count == 1);
  CHECK(r.cases[0].passed);
  CHECK(r.worst_rel_residual == 0.0);
}

TEST_CASE("sweep bodies are deterministic across runs and thread counts") {
  SweepConfig cfg = parse_sweep_config(json::parse(R"({
    "identity": "bilateral-vandermonde", "cases": 24, "seed": 1234,
    "ranges": {"n": [0.5, 4], "p": [-1.5, 2.5], "K": [-2, 2], "M0": [0, 1]}
  })"));
  const std::string once = to_json(run_sweep(cfg), false).dump();
  CHECK(once == to_json(run_sweep(cfg), false).dump());
  cfg.threads = 8;
  CHECK(once == to_json(run_sweep(cfg), false).dump());
  CHECK(to_json(run_sweep(cfg), true).contains("runtime_seconds"));
  CHECK_FALSE(to_json(run_sweep(cfg), false).contains("runtime_seconds"));
}

TEST_CASE("different seeds draw different cases") {
  SweepConfig cfg = parse_sweep_config(json::parse(R"({
    "identity": "bilateral-binomial", "cases": 3, "seed": 1,
    "ranges": {"x": [0.5, 4], "y": [-2, 2]}
  })"));
  const std::string a = to_json(run_sweep(cfg), false).dump();
  cfg.seed = 2;
  CHECK(a != to_json(run_sweep(cfg), false).dump());
}

TEST_CASE("config echo round-trips") {
  const SweepConfig cfg = parse_sweep_config(json::parse(R"({
    "identity": "eq18", "cases": 3, "seed": 9, "variant": "as-printed",
    "ranges": {"n": [0.5, 4], "p": [-1.5, 2.5], "K": [-2, 2], "M": [-1, 1]},
    "policy": {"rel_tolerance": 1e-9}
  })"));
  CHECK(cfg.identity == "vandermonde-closed-form");
  CHECK(cfg.variant == ClosedFormVariant::as_printed);
  CHECK(cfg.policy.rel_tolerance == 1e-9);
  const json echo = to_json(cfg);
  CHECK(to_json(parse_sweep_config(echo)).dump() == echo.dump());
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_sweep_config(json::parse(R"({"identity": "nope", "cases": 1, "seed": 1, "ranges": {}})")),
                  ConfigError);
  CHECK_THROWS_AS(parse_sweep_config(json::parse(
                      R"({"identity": "gauss-2h2", "cases": 1, "seed": 1, "ranges": {"a": [0, 1]}})")),
                  ConfigError);
  CHECK_THROWS_AS(parse_sweep_config(json::parse(
                      R"({"identity": "bilateral-binomial", "cases": 1, "seed": 1, "bogus": 3,
                          "ranges": {"x": [1, 2], "y": [0, 1]}})")),
                  ConfigError);
  CHECK_THROWS_AS(parse_sweep_config(json::parse(
                      R"({"identity": "bilateral-binomial", "cases": 1, "seed": 1,
                          "ranges": {"x": [2, 1], "y": [0, 1]}})")),
                  ConfigError);
  CHECK_THROWS_AS(parse_sweep_config(json::parse(
                      R"({"identity": "bilateral-binomial", "cases": 0, "seed": 1,
                          "ranges": {"x": [1, 2], "y": [0, 1]}})")),
                  ConfigError);
  CHECK_THROWS_AS(parse_sweep_config(json::parse(
                      R"({"identity": "bilateral-binomial", "cases": 1, "seed": 1,
                          "ranges": {"x": [1, 2], "y": [0, 1]}, "policy": {"speed": 1}})")),
                  ConfigError);
  CHECK_THROWS_AS(load_sweep_config("/nonexistent/sweep.json"), ConfigError);
}

TEST_CASE("unsatisfiable margins") {
  const SweepConfig cfg = parse_sweep_config(json::parse(R"({
    "identity": "bilateral-binomial", "cases": 2, "seed": 3,
    "ranges": {"x": [1, 2], "y": [1, 1]}
  })"));
  CHECK_THROWS_AS(run_sweep(cfg), UnsatisfiableConstraintError);
}

TEST_CASE("gauss sweep honours the excess window") {
  const SweepReport r = run_sweep(gauss_config(20));
  CHECK(r.pass_count == 20);
  for (const auto& c : r.cases) {
    double a = 0, b = 0, cc = 0, d = 0;
    for (const auto& p : c.inputs) {
      const double v = std::get<double>(p.value);
      if (p.name == "a") a = v;
      if (p.name == "b") b = v;
      if (p.name == "c") cc = v;
      if (p.name == "d") d = v;
    }
    const double excess = cc + d - a - b - 1;
    CHECK(excess >= 1.0);
    CHECK(excess <= 3.0);
  }
}
