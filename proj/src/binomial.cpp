#include "bilateral/binomial.hpp"

#include <cmath>

#include "bilateral/errors.hpp"
#include "bilateral/gamma.hpp"

namespace bilateral {

namespace {
constexpr double kMaxLogMagnitude = 700.0;
}

SignedLogValue binom_signed(double x, double y) { return detail::binom_extended(x, y).cast<double>(); }

double binom_real(double x, double y) {
  const auto v = detail::binom_extended(x, y);
  if (v.sign != 0 && v.log_magnitude > kMaxLogMagnitude)
    throw OverflowError("binomial coefficient exceeds the double range");
  return static_cast<double>(v.value());
}

BigInt binom_exact(std::int64_t n, std::int64_t k) {
  if (n < 0) throw InvalidArgumentError("binom_exact requires n >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // After step i the accumulator is C(n-k+i, i), so each division is exact.
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

namespace detail {

SignedLog<long double> binom_extended(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y))
    throw InvalidArgumentError("binomial arguments must be finite");
  return gamma_ratio_extended({{x + 1.0}, {y + 1.0, x - y + 1.0}});
}

}  // namespace detail

}  // namespace bilateral
