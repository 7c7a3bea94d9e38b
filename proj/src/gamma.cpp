#include "bilateral/gamma.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "bilateral/detail/lanczos.hpp"
#include "bilateral/errors.hpp"

namespace bilateral {

namespace {

// Below this |n| the Pochhammer symbol is a plain product; above it the
// Gamma route is cheaper and just as accurate in extended precision.
constexpr std::int64_t kDirectProductLimit = 64;

std::string describe(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// Neumaier-compensated accumulator.
struct CompensatedSum {
  long double sum = 0;
  long double carry = 0;

  void add(long double v) {
    const long double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      carry += (sum - t) + v;
    else
      carry += (v - t) + sum;
    sum = t;
  }
  long double total() const { return sum + carry; }
};

SignedLog<long double> product_pochhammer(double a, std::int64_t n) {
  long double product = 1;
  if (n > 0) {
    for (std::int64_t i = 0; i < n; ++i) {
      const double factor_at = a + static_cast<double>(i);
      if (near_integer(factor_at) && std::round(factor_at) == 0) return SignedLog<long double>::zero();
      product *= static_cast<long double>(a) + i;
    }
  } else {
    for (std::int64_t i = 1; i <= -n; ++i) {
      const double factor_at = a - static_cast<double>(i);
      if (near_integer(factor_at) && std::round(factor_at) == 0)
        throw InfiniteValueError("Pochhammer symbol (" + describe(a) + ")_" + std::to_string(n) +
                                 " has a pole");
      product /= static_cast<long double>(a) - i;
    }
  }
  return SignedLog<long double>::from_value(product);
}

}  // namespace

bool near_integer(double x) { return std::abs(x - std::round(x)) <= kLatticeTolerance; }

bool on_pole_lattice(double x) { return near_integer(x) && std::round(x) <= 0; }

SignedLogValue log_gamma_signed(double x) { return detail::log_gamma_extended(x).cast<double>(); }

double reciprocal_gamma(double x) {
  if (!std::isfinite(x)) throw InvalidArgumentError("reciprocal_gamma: non-finite argument");
  if (on_pole_lattice(x)) return 0.0;
  return detail::log_gamma_extended(x).reciprocal().cast<double>().value();
}

SignedLogValue pochhammer_signed(double a, std::int64_t n) {
  return detail::pochhammer_extended(a, n).cast<double>();
}

SignedLogValue gamma_ratio(const GammaRatioSpec& spec) {
  return detail::gamma_ratio_extended(spec).cast<double>();
}

double gamma_ratio_value(const GammaRatioSpec& spec) {
  return static_cast<double>(detail::gamma_ratio_extended(spec).value());
}

namespace detail {

SignedLog<long double> log_gamma_extended(double x) {
  if (!std::isfinite(x)) throw InvalidArgumentError("log_gamma: non-finite argument " + describe(x));
  if (on_pole_lattice(x)) throw PoleError("Gamma has a pole at " + describe(x));
  return log_gamma_regular(static_cast<long double>(x));
}

SignedLog<long double> pochhammer_extended(double a, std::int64_t n) {
  if (!std::isfinite(a)) throw InvalidArgumentError("pochhammer: non-finite argument");
  if (n == 0) return SignedLog<long double>::one();
  if (std::llabs(n) <= kDirectProductLimit) return product_pochhammer(a, n);

  const double end = a + static_cast<double>(n);
  const bool start_pole = on_pole_lattice(a);
  const bool end_pole = on_pole_lattice(end);
  if (start_pole && end_pole) {
    // (a)_n = (-1)^n Gamma(1-a) / Gamma(1-a-n), both arguments positive integers.
    const double reflected = 1.0 - std::round(a);
    auto value = log_gamma_regular(static_cast<long double>(reflected)) /
                 log_gamma_regular(static_cast<long double>(reflected - static_cast<double>(n)));
    if (n % 2 != 0) value.sign = -value.sign;
    return value;
  }
  if (start_pole) return SignedLog<long double>::zero();
  if (end_pole)
    throw InfiniteValueError("Pochhammer symbol (" + describe(a) + ")_" + std::to_string(n) +
                             " has a pole");
  return log_gamma_regular(static_cast<long double>(end)) /
         log_gamma_regular(static_cast<long double>(a));
}

SignedLog<long double> gamma_ratio_extended(const GammaRatioSpec& spec) {
  int numerator_poles = 0;
  int denominator_poles = 0;
  for (double v : spec.numerator) {
    if (!std::isfinite(v)) throw InvalidArgumentError("gamma_ratio: non-finite numerator entry");
    numerator_poles += on_pole_lattice(v);
  }
  for (double v : spec.denominator) {
    if (!std::isfinite(v)) throw InvalidArgumentError("gamma_ratio: non-finite denominator entry");
    denominator_poles += on_pole_lattice(v);
  }
  if (numerator_poles > 0 && denominator_poles > 0)
    throw IndeterminateRatioError("gamma_ratio: poles in both numerator and denominator");
  if (numerator_poles > 0) throw InfiniteValueError("gamma_ratio: pole in the numerator");
  if (denominator_poles > 0) return SignedLog<long double>::zero();

  int sign = 1;
  CompensatedSum log_sum;
  for (double v : spec.numerator) {
    const auto g = log_gamma_regular(static_cast<long double>(v));
    sign *= g.sign;
    log_sum.add(g.log_magnitude);
  }
  for (double v : spec.denominator) {
    const auto g = log_gamma_regular(static_cast<long double>(v));
    sign *= g.sign;
    log_sum.add(-g.log_magnitude);
  }
  return {sign, log_sum.total()};
}

}  // namespace detail

}  // namespace bilateral
