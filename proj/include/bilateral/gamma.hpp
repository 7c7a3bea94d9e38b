#pragma once

#include <cstdint>
#include <vector>

#include "bilateral/signed_log.hpp"

namespace bilateral {

/// Distance below which an argument counts as sitting exactly on an integer
/// (and therefore, when non-positive, on a pole of Gamma).
inline constexpr double kLatticeTolerance = 1e-9;

/// True when x is within kLatticeTolerance of an integer.
bool near_integer(double x);

/// True when x is within kLatticeTolerance of a non-positive integer.
bool on_pole_lattice(double x);

/// Sign and log|Gamma(x)|. Throws PoleError on the pole lattice.
SignedLogValue log_gamma_signed(double x);

/// 1/Gamma(x); exactly zero on the pole lattice.
double reciprocal_gamma(double x);

/// Pochhammer symbol (a)_n = Gamma(a+n)/Gamma(a) for any integer n, with
/// (a)_{-m} = (-1)^m / (1-a)_m. Yields zero when only a is on the pole
/// lattice, the finite limit when both a and a+n are, and throws
/// InfiniteValueError when only a+n is.
SignedLogValue pochhammer_signed(double a, std::int64_t n);

/// The bracket prod Gamma(numerator) / prod Gamma(denominator).
struct GammaRatioSpec {
  std::vector<double> numerator;
  std::vector<double> denominator;
};

/// Evaluates a Gamma bracket in signed-log form. Denominator poles give an
/// exact zero; numerator poles throw InfiniteValueError, or
/// IndeterminateRatioError when the denominator also has one.
SignedLogValue gamma_ratio(const GammaRatioSpec& spec);

/// gamma_ratio projected to a double, exponentiated in extended precision.
double gamma_ratio_value(const GammaRatioSpec& spec);

namespace detail {

// Extended-precision variants used by the series engine, where log
// magnitudes of individual factors can reach 1e5 while their ratio is O(1).
SignedLog<long double> log_gamma_extended(double x);
SignedLog<long double> pochhammer_extended(double a, std::int64_t n);
SignedLog<long double> gamma_ratio_extended(const GammaRatioSpec& spec);

}  // namespace detail

}  // namespace bilateral
