#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

namespace bilateral {

using Complex = std::complex<double>;

/// A bilateral pHp series  sum_{nu in Z} prod (a_i)_nu / prod (b_j)_nu  z^nu.
struct BilateralSeriesSpec {
  std::vector<double> upper;
  std::vector<double> lower;
  Complex z{1.0, 0.0};
};

enum class Convergence { absolute, conditional, divergent, terminating };

enum class Acceleration { none, paired_aitken };

std::string_view to_string(Convergence c);
std::string_view to_string(Acceleration a);
/// Throws InvalidArgumentError for unknown names.
Acceleration parse_acceleration(std::string_view name);

struct TruncationPolicy {
  double rel_tolerance = 1e-8;
  std::int64_t max_half_width = 1'000'000;
  /// On: tails of algebraically decaying sides are estimated and added to
  /// the value; off: the raw partial sum is returned with a bound only.
  bool tail_estimation = true;
  bool allow_conditional = false;
  Acceleration acceleration = Acceleration::none;

  /// Throws InvalidArgumentError unless rel_tolerance > 0 and
  /// max_half_width >= 8.
  void validate() const;
};

struct SeriesResult {
  Complex value;
  std::int64_t terms_used = 0;
  bool converged = false;
  /// Estimated magnitude of the error left in `value`.
  double tail_estimate = 0.0;
  /// Fitted s in |t_nu| ~ |nu|^s; NaN for terminating series.
  double decay_exponent = 0.0;
  Convergence classification = Convergence::absolute;
};

/// Classifies a pHp series on the unit circle by its decay exponent
/// s = sum(upper) - sum(lower) after matched parameters are cancelled.
/// Throws InvalidArgumentError when |z| != 1.
Convergence classify_convergence(const BilateralSeriesSpec& spec);

/// Sums the series outward from t_0 = 1 by term-ratio recurrence.
SeriesResult eval_bilateral(const BilateralSeriesSpec& spec, const TruncationPolicy& policy = {});

/// sum_{k in Z} C(x, y+k) z^(y+k) on the principal branch, which the
/// bilateral binomial theorem equates to (1+z)^x.
SeriesResult bilateral_binomial_sum(double x, double y, Complex z,
                                    const TruncationPolicy& policy = {});

/// sum_{j in Z} C(n-p, K-M0-j) C(p, M0+j), the bilateral Vandermonde
/// convolution over the lattice M0 + Z.
SeriesResult vandermonde_convolution_sum(double n, double p, double K, double M0,
                                         const TruncationPolicy& policy = {});

/// w^e = exp(e Log w) with arg Log w in (-pi, pi].
Complex power_principal(Complex w, double e);

/// e^{i theta}.
Complex unit_circle(double theta);

}  // namespace bilateral
