#include "bilateral/identities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bilateral/binomial.hpp"
#include "bilateral/errors.hpp"
#include "bilateral/gamma.hpp"

namespace bilateral {

namespace identity {

std::string_view canonical(std::string_view name) {
  for (std::string_view known : {kBinomialTheorem, kVandermondeExact, kBilateralBinomial, kGauss2H2,
                                 kBilateralVandermonde, kVandermondeClosedForm})
    if (name == known) return known;
  if (name == "eq18") return kVandermondeClosedForm;
  throw InvalidArgumentError("unknown identity '" + std::string(name) + "'");
}

}  // namespace identity

namespace {

constexpr double kPreconditionMargin = 0.05;

void finish(IdentityReport& report, double tolerance) {
  report.tolerance = tolerance;
  report.abs_residual = std::abs(report.lhs - report.rhs);
  report.rel_residual = relative_residual(report.lhs, report.rhs);
  report.passed = report.rel_residual <= tolerance;
}

Complex to_complex(const BigInt& v) { return {v.convert_to<double>(), 0.0}; }

}  // namespace

double relative_residual(Complex lhs, Complex rhs) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

double pole_lattice_distance(double x) { return x >= 0 ? x : std::abs(x - std::round(x)); }

double integer_lattice_distance(double x) { return std::abs(x - std::round(x)); }

std::string_view to_string(ClosedFormVariant v) {
  return v == ClosedFormVariant::as_printed ? "as-printed" : "sign-corrected";
}

ClosedFormVariant parse_variant(std::string_view name) {
  if (name == "as-printed") return ClosedFormVariant::as_printed;
  if (name == "sign-corrected") return ClosedFormVariant::sign_corrected;
  throw InvalidArgumentError("unknown variant '" + std::string(name) + "'");
}

IdentityReport verify_binomial_theorem(std::int64_t n, std::span<const std::int64_t> x_values) {
  if (n < 0) throw PreconditionError("binomial theorem needs n >= 0");
  IdentityReport report;
  report.identity = identity::kBinomialTheorem;
  report.inputs.push_back({"n", n});
  report.passed = true;

  bool reported_failure = false;
  for (std::int64_t x : x_values) {
    BigInt lhs = 0;
    BigInt power = 1;
    for (std::int64_t k = 0; k <= n; ++k) {
      lhs += binom_exact(n, k) * power;
      power *= x;
    }
    const BigInt rhs = boost::multiprecision::pow(BigInt(1 + x), static_cast<unsigned>(n));
    const bool equal = lhs == rhs;
    report.exact.push_back({"x=" + std::to_string(x), lhs.str(), rhs.str(), equal});
    if (!reported_failure) {
      report.lhs = to_complex(lhs);
      report.rhs = to_complex(rhs);
      report.abs_residual = equal ? 0.0 : std::abs(to_complex(lhs - rhs));
      report.rel_residual = equal ? 0.0 : relative_residual(report.lhs, report.rhs);
    }
    if (!equal) {
      report.passed = false;
      reported_failure = true;
    }
  }
  report.tolerance = 0.0;
  return report;
}

IdentityReport verify_vandermonde_exact(const ExactVandermondeInstance& inst) {
  if (inst.n < 0 || inst.p < 0 || inst.p > inst.n)
    throw PreconditionError("Vandermonde convolution needs 0 <= p <= n");
  IdentityReport report;
  report.identity = identity::kVandermondeExact;
  report.inputs = {{"n", inst.n}, {"m", inst.m}, {"p", inst.p}};

  const BigInt lhs = binom_exact(inst.n, inst.m);
  BigInt rhs = 0;
  for (std::int64_t k = 0; k <= std::max(inst.m, inst.p); ++k)
    rhs += binom_exact(inst.n - inst.p, inst.m - k) * binom_exact(inst.p, k);

  const bool equal = lhs == rhs;
  report.exact.push_back({"C(n,m)", lhs.str(), rhs.str(), equal});
  report.lhs = to_complex(lhs);
  report.rhs = to_complex(rhs);
  report.abs_residual = equal ? 0.0 : std::abs(to_complex(lhs - rhs));
  report.rel_residual = equal ? 0.0 : relative_residual(report.lhs, report.rhs);
  report.tolerance = 0.0;
  report.passed = equal;
  return report;
}

IdentityReport verify_bilateral_binomial(double x, double y, Complex z, const TruncationPolicy& policy,
                                         double tolerance) {
  IdentityReport report;
  report.identity = identity::kBilateralBinomial;
  report.inputs = {{"x", x}, {"y", y}, {"z_re", z.real()}, {"z_im", z.imag()}};

  const SeriesResult lattice_sum = bilateral_binomial_sum(x, y, z, policy);
  report.diagnostics.push_back({"lattice sum", lattice_sum});
  report.lhs = lattice_sum.value;
  report.rhs = power_principal(1.0 + z, x);
  finish(report, tolerance);

  const Complex z_to_y = power_principal(z, y);
  report.extras.push_back({"z^k reading rel_residual", relative_residual(lattice_sum.value / z_to_y, report.rhs)});

  // Gamma bracket times 1H1[y-x; y+1; -z], scaled by z^y.
  try {
    const auto bracket = binom_signed(x, y);
    if (bracket.is_zero()) {
      report.notes.push_back("Gamma-bracket form vanishes at this y; not compared");
    } else {
      const SeriesResult one_h_one = eval_bilateral({{y - x}, {y + 1.0}, -z}, policy);
      report.diagnostics.push_back({"1H1 series", one_h_one});
      const Complex closed = bracket.value() * z_to_y * one_h_one.value;
      report.extras.push_back({"bracket form rel_residual", relative_residual(closed, report.lhs)});
    }
  } catch (const Error& e) {
    report.notes.push_back(std::string("Gamma-bracket form not evaluated: ") + e.what());
  }
  return report;
}

IdentityReport verify_gauss_2h2(const GaussParameters& g, const TruncationPolicy& policy, double tolerance) {
  const double excess = g.c + g.d - g.a - g.b - 1.0;
  if (!(excess >= kPreconditionMargin))
    throw PreconditionError("c+d-a-b-1 = " + std::to_string(excess) + " is below the convergence margin 0.05");
  const std::vector<double> numerator{g.c, g.d, 1.0 - g.a, 1.0 - g.b, excess};
  const std::vector<double> denominator{g.c - g.a, g.d - g.a, g.c - g.b, g.d - g.b};
  for (double v : numerator)
    if (pole_lattice_distance(v) < kPreconditionMargin)
      throw PreconditionError("numerator Gamma argument " + std::to_string(v) + " is within 0.05 of a pole");
  for (double v : denominator)
    if (pole_lattice_distance(v) < kPreconditionMargin && !on_pole_lattice(v))
      throw PreconditionError("denominator Gamma argument " + std::to_string(v) + " is within 0.05 of a pole");

  IdentityReport report;
  report.identity = identity::kGauss2H2;
  report.inputs = {{"a", g.a}, {"b", g.b}, {"c", g.c}, {"d", g.d}};
  const SeriesResult series = eval_bilateral({{g.a, g.b}, {g.c, g.d}, {1.0, 0.0}}, policy);
  report.diagnostics.push_back({"2H2 series", series});
  report.lhs = series.value;
  report.rhs = gamma_ratio({numerator, denominator}).value();
  finish(report, tolerance);
  return report;
}

IdentityReport verify_bilateral_vandermonde(const BilateralVandermondeInstance& inst,
                                            const TruncationPolicy& policy, double tolerance) {
  if (!(inst.n > -1.0 + kPreconditionMargin))
    throw PreconditionError("n must exceed -0.95 for absolute convergence");
  IdentityReport report;
  report.identity = identity::kBilateralVandermonde;
  report.inputs = {{"n", inst.n}, {"p", inst.p}, {"K", inst.K}, {"M0", inst.M0}};
  report.lhs = binom_real(inst.n, inst.K);
  const SeriesResult sum = vandermonde_convolution_sum(inst.n, inst.p, inst.K, inst.M0, policy);
  report.diagnostics.push_back({"convolution", sum});
  report.rhs = sum.value;
  finish(report, tolerance);
  return report;
}

IdentityReport verify_vandermonde_closed_form(const ClosedFormInstance& inst, const TruncationPolicy& policy,
                                              double tolerance) {
  const double n = inst.n, p = inst.p, K = inst.K, M = inst.M;
  IdentityReport report;
  report.identity = identity::kVandermondeClosedForm;
  report.inputs = {{"n", n}, {"p", p}, {"K", K}, {"M", M}, {"variant", std::string(to_string(inst.variant))}};
  report.lhs = binom_real(n, K);

  const auto prefactor =
      gamma_ratio({{n - p + 1.0, p + 1.0}, {K - M + 1.0, n - p - K + M + 1.0, M + 1.0, p - M + 1.0}});
  const double first_upper = inst.variant == ClosedFormVariant::as_printed ? K - M : M - K;
  const SeriesResult series = eval_bilateral({{first_upper, M - p}, {n - p - K + M + 1.0, M + 1.0}, {1.0, 0.0}}, policy);
  report.diagnostics.push_back({"2H2 series", series});
  report.extras.push_back({"prefactor", prefactor.value()});
  report.rhs = prefactor.value() * series.value;
  finish(report, tolerance);
  return report;
}

}  // namespace bilateral
