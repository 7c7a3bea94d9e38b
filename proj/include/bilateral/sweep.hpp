#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "bilateral/identities.hpp"
#include "bilateral/series.hpp"

namespace bilateral {

struct Interval {
  double lo;
  double hi;
};

/// A seeded batch of identity checks.
///
/// Every case draws its parameters from std::mt19937_64 seeded with
/// `seed ^ case_index`, taking uniform reals from the top 53 bits of each
/// output. Symbols are drawn in the identity's fixed order and the whole
/// draw is repeated (up to 100 times) until the lattice and convergence
/// margins hold. Results therefore never depend on `threads`.
struct SweepConfig {
  std::string identity;
  std::int64_t cases = 1;
  std::uint64_t seed = 0;
  double tolerance = kDefaultCaseTolerance;
  std::map<std::string, Interval> ranges;
  TruncationPolicy policy;
  ClosedFormVariant variant = ClosedFormVariant::sign_corrected;
  double lattice_margin = 0.05;
  double convergence_margin = 0.05;
  unsigned threads = 1;
};

struct SweepReport {
  SweepConfig config;
  std::vector<IdentityReport> cases;
  std::int64_t pass_count = 0;
  std::int64_t error_count = 0;
  double worst_rel_residual = 0.0;
  double runtime_seconds = 0.0;
};

/// Symbols a sweep of `identity` samples, in draw order. Optional symbols
/// (z_arg for the bilateral binomial theorem, excess for Gauss) are listed
/// after the required ones.
std::vector<std::string> sweep_symbols(std::string_view identity);

SweepConfig parse_sweep_config(const nlohmann::json& j);
SweepConfig load_sweep_config(const std::filesystem::path& path);

/// Config echo; `threads` is omitted so the report body is independent of it.
nlohmann::json to_json(const SweepConfig& config);

/// Full report. With include_timing = false the result is the report body,
/// which is bit-identical across runs of the same config.
nlohmann::json to_json(const SweepReport& report, bool include_timing = true);

SweepReport run_sweep(const SweepConfig& config);

}  // namespace bilateral
