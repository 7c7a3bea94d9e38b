#include "doctest.h"

#include "bilateral/binomial.hpp"
#include "bilateral/errors.hpp"
#include "support.hpp"

using namespace bilateral;
using bilateral::test::rel_err;
using bilateral::test::Sampler;

TEST_CASE("binom examples") {
  CHECK(binom_real(5, 2) == 10.0);
  CHECK(binom_signed(5, 2).sign == 1);
  CHECK(rel_err(binom_real(0.5, 2), -0.125) < 1e-15);
  CHECK(binom_signed(3, 5).is_zero());
  CHECK(binom_real(3, 5) == 0.0);
  CHECK(binom_real(3, -1) == 0.0);
  CHECK(rel_err(binom_real(2.5, 0.7), 2.1816435347361088915) < 1e-13);
  CHECK(rel_err(binom_real(1, 0.5), 1.2732395447351626862) < 1e-13);
  CHECK(rel_err(binom_real(-1.5, 2), 1.875) < 1e-15);
}

TEST_CASE("binom lattice errors") {
  CHECK_THROWS_AS(binom_signed(-1, 0.5), InfiniteValueError);
  CHECK_THROWS_AS(binom_signed(-1, 2), IndeterminateRatioError);
  CHECK_THROWS_AS(binom_real(2000, 1000), OverflowError);
}

TEST_CASE("binom_exact") {
  CHECK(binom_exact(5, 2) == 10);
  CHECK(binom_exact(30, 15) == 155117520);
  CHECK(binom_exact(4, -1) == 0);
  CHECK(binom_exact(4, 5) == 0);
  CHECK(binom_exact(0, 0) == 1);
  CHECK(binom_exact(100, 50) == BigInt("100891344545564193334812497256"));
}

TEST_CASE("property: binom_real matches binom_exact for n <= 60") {
  double worst = 0;
  for (std::int64_t n = 0; n <= 60; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      const double exact = binom_exact(n, k).convert_to<double>();
      worst = std::max(worst, rel_err(binom_real(double(n), double(k)), exact));
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("property: binom symmetry") {
  Sampler s(4);
  int failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const double x = s.off_integers(-6, 12);
    const double y = s.off_integers(-6, 12);
    if (bilateral::integer_lattice_distance(x - y) < 0.05) continue;
    if (!(relative_distance(binom_signed(x, y), binom_signed(x, x - y)) <= 1e-11)) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("property: Pascal's rule for real arguments") {
  Sampler s(5);
  int failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const double x = s.off_integers(-6, 12);
    const double y = s.off_integers(-6, 12);
    if (bilateral::integer_lattice_distance(x - y) < 0.05) continue;
    const double lhs = binom_real(x, y);
    const double rhs = binom_real(x - 1, y - 1) + binom_real(x - 1, y);
    if (!(rel_err(rhs, lhs) <= 1e-9)) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("property: algebraic decay plateau") {
  for (double x : {0.5, 1.7, 3.2}) {
    const double y0 = 0.3;
    double lo = HUGE_VAL, hi = 0;
    for (int j = 1000; j <= 10000; j += 500) {
      const double scaled = std::abs(binom_real(x, y0 + j)) * std::pow(double(j), x + 1);
      lo = std::min(lo, scaled);
      hi = std::max(hi, scaled);
    }
    CHECK(lo > 0);
    CHECK((hi - lo) / lo <= 0.05);
  }
}
