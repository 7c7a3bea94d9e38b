#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bilateral/series.hpp"
#include "bilateral/signed_log.hpp"

namespace bilateral::detail {

/// Term-ratio shape shared by every bilateral sum in the library:
///   c_{nu+1} / c_nu = sign * prod(upper + nu) / prod(lower + nu).
/// The full term is t_nu = c_nu z^nu.
struct RatioProfile {
  std::vector<double> upper;
  std::vector<double> lower;
  int sign = 1;

  double decay_exponent() const;
};

/// Drops upper/lower pairs equal within the lattice tolerance.
RatioProfile cancel_matching(std::vector<double> upper, std::vector<double> lower, int sign);

struct Termination {
  bool forward = false;
  bool backward = false;
};

/// Which sides of the recurrence reach an exact zero before any pole.
Termination static_termination(const RatioProfile& profile);

/// Throws InvalidArgumentError unless |z| = 1 within 1e-12.
void require_unit_modulus(Complex z);

Convergence classify(const RatioProfile& profile, Complex z);

/// Exact coefficient c_nu for the drift guard; nullopt when unavailable.
using ExactCoefficient = std::function<std::optional<SignedLog<long double>>(std::int64_t)>;

/// Symmetric outward summation starting from coefficient c_0 = t0.
/// Raises DivergentSeriesError / ConditionalRefusedError according to the
/// classification and DegenerateParameterError on interior poles.
SeriesResult sum_outward(const RatioProfile& profile, long double t0, Complex z,
                         const TruncationPolicy& policy, const ExactCoefficient& exact);

}  // namespace bilateral::detail
