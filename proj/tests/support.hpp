#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "bilateral/gamma.hpp"
#include "bilateral/identities.hpp"

namespace bilateral::test {

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  // Uniform on [lo, hi] but at least `margin` from every non-positive integer.
  double regular(double lo, double hi, double margin = 0.05) {
    for (;;) {
      const double x = uniform(lo, hi);
      if (pole_lattice_distance(x) >= margin) return x;
    }
  }

  // Uniform on [lo, hi] but at least `margin` from every integer.
  double off_integers(double lo, double hi, double margin = 0.05) {
    for (;;) {
      const double x = uniform(lo, hi);
      if (integer_lattice_distance(x) >= margin) return x;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bilateral::test
