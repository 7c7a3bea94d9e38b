#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bilateral/series.hpp"

namespace bilateral {

/// Canonical identity labels, shared by reports, sweeps and the CLI.
namespace identity {
inline constexpr std::string_view kBinomialTheorem = "binomial-theorem";
inline constexpr std::string_view kVandermondeExact = "vandermonde-exact";
inline constexpr std::string_view kBilateralBinomial = "bilateral-binomial";
inline constexpr std::string_view kGauss2H2 = "gauss-2h2";
inline constexpr std::string_view kBilateralVandermonde = "bilateral-vandermonde";
inline constexpr std::string_view kVandermondeClosedForm = "vandermonde-closed-form";

/// Maps a user-supplied name (including aliases) to its canonical label.
/// Throws InvalidArgumentError for unknown names.
std::string_view canonical(std::string_view name);
}  // namespace identity

struct Parameter {
  std::string name;
  std::variant<double, std::int64_t, std::string> value;
};

struct SeriesDiagnostic {
  std::string label;
  SeriesResult result;
};

/// Secondary quantity recorded alongside the primary residual.
struct Measurement {
  std::string name;
  double value;
};

/// One exact (big-integer) comparison, values in decimal.
struct ExactCheck {
  std::string label;
  std::string lhs;
  std::string rhs;
  bool equal;
};

struct IdentityReport {
  std::string identity;
  std::vector<Parameter> inputs;
  Complex lhs;
  Complex rhs;
  double abs_residual = 0.0;
  /// abs_residual / max(|lhs|, |rhs|, 1e-300)
  double rel_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::vector<SeriesDiagnostic> diagnostics;
  std::vector<Measurement> extras;
  std::vector<std::string> notes;
  std::vector<ExactCheck> exact;
  std::optional<std::string> error;
};

/// |lhs - rhs| / max(|lhs|, |rhs|, 1e-300)
double relative_residual(Complex lhs, Complex rhs);

inline constexpr double kDefaultCaseTolerance = 1e-6;

struct GaussParameters {
  double a, b, c, d;
};

struct ExactVandermondeInstance {
  std::int64_t n, m, p;
};

struct BilateralVandermondeInstance {
  double n, p, K, M0;
};

/// Which upper parameter pair the closed-form Vandermonde evaluation uses:
/// (K-M, M-p) as printed, or (M-K, M-p), the pair whose term ratio matches
/// the convolution.
enum class ClosedFormVariant { as_printed, sign_corrected };

std::string_view to_string(ClosedFormVariant v);
ClosedFormVariant parse_variant(std::string_view name);

struct ClosedFormInstance {
  double n, p, K, M;
  ClosedFormVariant variant = ClosedFormVariant::sign_corrected;
};

/// sum_k C(n,k) x^k == (1+x)^n in exact arithmetic for each x.
IdentityReport verify_binomial_theorem(std::int64_t n, std::span<const std::int64_t> x_values);

/// C(n,m) == sum_{k=0}^{max(m,p)} C(n-p, m-k) C(p,k) in exact arithmetic.
IdentityReport verify_vandermonde_exact(const ExactVandermondeInstance& inst);

/// Bilateral binomial theorem: the lattice sum against (1+z)^x, with the
/// Gamma-bracket times 1H1 form and the z^k reading recorded as extras.
IdentityReport verify_bilateral_binomial(double x, double y, Complex z, const TruncationPolicy& policy = {},
                                         double tolerance = kDefaultCaseTolerance);

/// Gauss's bilateral 2H2 summation at z = 1 against its Gamma bracket.
IdentityReport verify_gauss_2h2(const GaussParameters& params, const TruncationPolicy& policy = {},
                                double tolerance = kDefaultCaseTolerance);

/// C(n, K) against the convolution over the lattice M0 + Z.
IdentityReport verify_bilateral_vandermonde(const BilateralVandermondeInstance& inst,
                                            const TruncationPolicy& policy = {},
                                            double tolerance = kDefaultCaseTolerance);

/// C(n, K) against Gamma prefactor x 2H2 with free parameter M.
IdentityReport verify_vandermonde_closed_form(const ClosedFormInstance& inst,
                                              const TruncationPolicy& policy = {},
                                              double tolerance = kDefaultCaseTolerance);

/// Distance from x to the nearest non-positive integer.
double pole_lattice_distance(double x);

/// Distance from x to the nearest integer.
double integer_lattice_distance(double x);

}  // namespace bilateral
