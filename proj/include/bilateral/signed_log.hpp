#pragma once

#include <cmath>
#include <limits>

namespace bilateral {

/// A real number stored as sign * exp(log_magnitude).
///
/// Products of many Gamma values overflow long before their ratio does, so
/// every Gamma-valued quantity in the library travels in this form and is
/// only projected to a plain real at the end. `sign == 0` is an exact zero
/// and the magnitude is ignored.
template <typename Scalar>
struct SignedLog {
  int sign = 0;
  Scalar log_magnitude = 0;

  static constexpr SignedLog zero() { return {0, Scalar(0)}; }
  static constexpr SignedLog one() { return {1, Scalar(0)}; }

  static SignedLog from_value(Scalar v) {
    if (v == 0) return zero();
    return {v > 0 ? 1 : -1, std::log(std::abs(v))};
  }

  bool is_zero() const { return sign == 0; }

  Scalar value() const {
    if (sign == 0) return Scalar(0);
    return sign * std::exp(log_magnitude);
  }

  SignedLog reciprocal() const { return {sign, -log_magnitude}; }

  template <typename Other>
  SignedLog<Other> cast() const {
    return {sign, static_cast<Other>(log_magnitude)};
  }

  friend SignedLog operator*(const SignedLog& a, const SignedLog& b) {
    if (a.sign == 0 || b.sign == 0) return zero();
    return {a.sign * b.sign, a.log_magnitude + b.log_magnitude};
  }

  // Division by an exact zero is the caller's bug; no value is meaningful.
  friend SignedLog operator/(const SignedLog& a, const SignedLog& b) {
    if (a.sign == 0) return zero();
    return {a.sign * b.sign, a.log_magnitude - b.log_magnitude};
  }

  SignedLog& operator*=(const SignedLog& o) { return *this = *this * o; }
  SignedLog& operator/=(const SignedLog& o) { return *this = *this / o; }
};

using SignedLogValue = SignedLog<double>;

/// Relative distance |a/b - 1| of two signed-log values, or infinity when
/// the signs differ. Two zeros are at distance 0.
template <typename Scalar>
Scalar relative_distance(const SignedLog<Scalar>& a, const SignedLog<Scalar>& b) {
  if (a.sign != b.sign) return std::numeric_limits<Scalar>::infinity();
  if (a.sign == 0) return Scalar(0);
  return std::abs(std::expm1(a.log_magnitude - b.log_magnitude));
}

}  // namespace bilateral
