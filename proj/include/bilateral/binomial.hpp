#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "bilateral/signed_log.hpp"

namespace bilateral {

using BigInt = boost::multiprecision::cpp_int;

/// Generalized binomial coefficient Gamma(x+1) / (Gamma(y+1) Gamma(x-y+1))
/// for real x, y. Exact zero when one lower Gamma sits on a pole and x+1
/// does not.
SignedLogValue binom_signed(double x, double y);

/// binom_signed projected to a double. Throws OverflowError when the
/// magnitude is not representable.
double binom_real(double x, double y);

/// Exact C(n, k) for n >= 0 and any integer k; zero outside 0 <= k <= n.
BigInt binom_exact(std::int64_t n, std::int64_t k);

namespace detail {
SignedLog<long double> binom_extended(double x, double y);
}

}  // namespace bilateral
