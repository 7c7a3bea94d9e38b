#pragma once

#include <cmath>
#include <numbers>

#include "bilateral/signed_log.hpp"

namespace bilateral::detail {

// Lanczos approximation with g = 7 and nine coefficients (Godfrey's set).
// Relative error of the series part is below 1e-15 for x >= 0.5.
inline constexpr long double kLanczosG = 7.0L;
inline constexpr long double kLanczosCoefficients[9] = {
    0.99999999999980993227684700473478L,
    676.520368121885098567009190444019L,
    -1259.13921672240287047156078755283L,
    771.3234287776530788486528258894L,
    -176.61502916214059906584551354L,
    12.507343278686904814458936853L,
    -0.13857109526572011689554707L,
    9.984369578019570859563e-6L,
    1.50563273514931155834e-7L,
};

/// sin(pi x) with exact argument reduction, so zeros at the integers are
/// exact and the sign is right on every interval.
template <typename Scalar>
Scalar sin_pi(Scalar x) {
  Scalar r = x - 2 * std::round(x / 2);  // exact, r in [-1, 1]
  Scalar sign = 1;
  if (r < 0) {
    r = -r;
    sign = -1;
  }
  if (r > Scalar(0.5)) r = 1 - r;
  return sign * std::sin(std::numbers::pi_v<Scalar> * r);
}

/// log Gamma(x) for x >= 0.5.
template <typename Scalar>
Scalar log_gamma_lanczos(Scalar x) {
  const Scalar xm1 = x - 1;
  Scalar sum = static_cast<Scalar>(kLanczosCoefficients[0]);
  for (int i = 1; i < 9; ++i) sum += static_cast<Scalar>(kLanczosCoefficients[i]) / (xm1 + i);
  const Scalar t = xm1 + static_cast<Scalar>(kLanczosG) + Scalar(0.5);
  const Scalar half_log_two_pi =
      Scalar(0.5) * std::log(2 * std::numbers::pi_v<Scalar>);
  return half_log_two_pi + (xm1 + Scalar(0.5)) * std::log(t) - t + std::log(sum);
}

/// Sign and log-magnitude of Gamma(x) for x off the pole lattice. Arguments
/// below 0.5 go through the reflection formula; the sign comes from
/// sin(pi x) since Gamma(1 - x) > 0 there.
template <typename Scalar>
SignedLog<Scalar> log_gamma_regular(Scalar x) {
  if (x >= Scalar(0.5)) return {1, log_gamma_lanczos(x)};
  const Scalar s = sin_pi(x);
  const Scalar log_pi = std::log(std::numbers::pi_v<Scalar>);
  return {s > 0 ? 1 : -1,
          log_pi - std::log(std::abs(s)) - log_gamma_lanczos(1 - x)};
}

}  // namespace bilateral::detail
