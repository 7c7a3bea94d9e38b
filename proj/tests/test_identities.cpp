#include <array>
#include <numbers>

#include "doctest.h"

#include "bilateral/binomial.hpp"
#include "bilateral/errors.hpp"
#include "bilateral/gamma.hpp"
#include "bilateral/identities.hpp"
#include "support.hpp"

using namespace bilateral;
using bilateral::test::rel_err;
using bilateral::test::Sampler;

namespace {

double extra(const IdentityReport& r, std::string_view name) {
  for (const auto& m : r.extras)
    if (m.name == name) return m.value;
  FAIL("missing extra " << name);
  return 0;
}

}  // namespace

TEST_CASE("identity names") {
  CHECK(identity::canonical("eq18") == identity::kVandermondeClosedForm);
  CHECK(identity::canonical("gauss-2h2") == identity::kGauss2H2);
  CHECK_THROWS_AS(identity::canonical("eq99"), InvalidArgumentError);
  CHECK(parse_variant("as-printed") == ClosedFormVariant::as_printed);
  CHECK(to_string(ClosedFormVariant::sign_corrected) == "sign-corrected");
}

TEST_CASE("relative_residual normalization") {
  CHECK(relative_residual(0.0, 0.0) == 0.0);
  CHECK(relative_residual(2.0, 0.0) == 1.0);
  CHECK(relative_residual(1.0, 1.5) == doctest::Approx(1.0 / 3));
}

TEST_CASE("verify_binomial_theorem") {
  const std::array<std::int64_t, 1> two{2};
  const IdentityReport r = verify_binomial_theorem(3, two);
  CHECK(r.passed);
  CHECK(r.rel_residual == 0.0);
  CHECK(r.lhs == Complex(27.0));
  REQUIRE(r.exact.size() == 1);
  CHECK(r.exact[0].lhs == "27");

  const std::array<std::int64_t, 1> five{5};
  CHECK(verify_binomial_theorem(0, five).exact[0].rhs == "1");

  const std::array<std::int64_t, 1> three{3};
  const IdentityReport big = verify_binomial_theorem(20, three);
  CHECK(big.passed);
  CHECK(big.exact[0].lhs == "1099511627776");
}

TEST_CASE("verify_vandermonde_exact") {
  const IdentityReport r = verify_vandermonde_exact({5, 2, 2});
  CHECK(r.passed);
  CHECK(r.exact[0].lhs == "10");
  CHECK(verify_vandermonde_exact({9, 4, 0}).passed);
  CHECK(verify_vandermonde_exact({25, 12, 9}).passed);
  CHECK(verify_vandermonde_exact({25, 12, 9}).abs_residual == 0.0);
}

TEST_CASE("verify_bilateral_binomial") {
  const IdentityReport unit = verify_bilateral_binomial(1, 0, 1.0);
  CHECK(unit.passed);
  CHECK(unit.rel_residual < 1e-15);
  CHECK(extra(unit, "bracket form rel_residual") < 1e-15);

  const IdentityReport r = verify_bilateral_binomial(2.5, 0.3, 1.0);
  CHECK(r.passed);
  CHECK(r.rel_residual <= 1e-6);
  CHECK(extra(r, "bracket form rel_residual") <= 1e-6);

  const IdentityReport c = verify_bilateral_binomial(1, 0.5, unit_circle(std::numbers::pi / 3));
  CHECK(c.passed);
  CHECK(c.rel_residual <= 1e-6);
  CHECK(rel_err(c.rhs, Complex(1.5, 0.86602540378443864676)) < 1e-15);
  // the z^k reading differs by the phase z^y unless y is an integer
  CHECK(extra(c, "z^k reading rel_residual") > 0.1);
}

TEST_CASE("verify_gauss_2h2") {
  const IdentityReport r = verify_gauss_2h2({0.5, 0.5, 1.5, 1.5});
  CHECK(r.passed);
  CHECK(rel_err(r.rhs, Complex(2.4674011002723396547)) < 1e-13);
  CHECK(r.rel_residual <= 1e-6);
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].result.converged);

  CHECK_THROWS_AS(verify_gauss_2h2({1, 1, 1.5, 1.5}), PreconditionError);

  const IdentityReport g = verify_gauss_2h2({0.25, 0.35, 1.2, 1.6});
  CHECK(g.passed);
  CHECK(rel_err(g.rhs, Complex(1.3791150366958834944)) < 1e-12);
}

TEST_CASE("verify_bilateral_vandermonde") {
  const IdentityReport r = verify_bilateral_vandermonde({2, 1, 1, 0});
  CHECK(r.passed);
  CHECK(rel_err(r.rhs, Complex(2.0)) < 1e-15);

  const IdentityReport a = verify_bilateral_vandermonde({2.5, 1.2, 0.7, 0.3});
  const IdentityReport b = verify_bilateral_vandermonde({2.5, 1.2, 0.7, 0.67});
  CHECK(a.passed);
  CHECK(b.passed);
  CHECK(a.lhs == b.lhs);
  CHECK(rel_err(a.lhs, Complex(2.1816435347361088915)) < 1e-13);

  CHECK_THROWS_AS(verify_bilateral_vandermonde({-0.97, 0.3, 0.2, 0.5}), PreconditionError);
}

TEST_CASE("verify_vandermonde_closed_form: printed pair versus corrected pair") {
  const IdentityReport printed = verify_vandermonde_closed_form({2, 1, 1, 0, ClosedFormVariant::as_printed});
  CHECK_FALSE(printed.passed);
  CHECK(printed.lhs == Complex(2.0));
  CHECK(printed.rhs == Complex(0.0));
  CHECK(printed.abs_residual == 2.0);
  CHECK(printed.rel_residual == 1.0);

  const IdentityReport fixed = verify_vandermonde_closed_form({2, 1, 1, 0, ClosedFormVariant::sign_corrected});
  CHECK(fixed.passed);
  CHECK(fixed.rhs == Complex(2.0));
  CHECK(fixed.abs_residual == 0.0);

  const IdentityReport generic = verify_vandermonde_closed_form({2.5, 1.2, 0.7, 0.3});
  CHECK(generic.passed);
  CHECK(generic.rel_residual <= 1e-6);
}

TEST_CASE("property: closed-form terms equal convolution terms") {
  Sampler s(9);
  int failures = 0, checked = 0;
  while (checked < 200) {
    const double n = s.uniform(0.5, 4), p = s.uniform(-1.5, 2.5);
    const double K = s.uniform(-2, 2), M = s.uniform(-1, 1);
    const std::array<double, 6> guards{n - p + 1, p + 1, K - M + 1, n - p - K + M + 1, M + 1, p - M + 1};
    bool regular = integer_lattice_distance(K - M) >= 0.05 && integer_lattice_distance(M - p) >= 0.05 &&
                   integer_lattice_distance(M) >= 0.05 && integer_lattice_distance(n - p - K + M) >= 0.05;
    for (double g : guards) regular = regular && pole_lattice_distance(g) >= 0.05;
    if (!regular) continue;
    ++checked;

    const SignedLogValue prefactor = gamma_ratio({{n - p + 1, p + 1}, {K - M + 1, n - p - K + M + 1, M + 1, p - M + 1}});
    for (int nu = -20; nu <= 20; ++nu) {
      const SignedLogValue term = prefactor * pochhammer_signed(M - K, nu) * pochhammer_signed(M - p, nu) /
                                  (pochhammer_signed(n - p - K + M + 1, nu) * pochhammer_signed(M + 1, nu));
      const SignedLogValue want = binom_signed(n - p, K - M - nu) * binom_signed(p, M + nu);
      if (!(relative_distance(term, want) <= 1e-9)) ++failures;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("property: offset invariance") {
  Sampler s(10);
  int checked = 0;
  while (checked < 30) {
    const double n = s.uniform(0.5, 4), p = s.uniform(-1.5, 2.5), K = s.uniform(-2, 2);
    const double M0 = s.uniform(0, 1), delta = s.uniform(0.05, 0.95);
    try {
      const IdentityReport a = verify_bilateral_vandermonde({n, p, K, M0});
      const IdentityReport b = verify_bilateral_vandermonde({n, p, K, M0 + delta});
      ++checked;
      CHECK(a.lhs == b.lhs);
      CHECK(a.passed);
      CHECK(b.passed);
    } catch (const Error&) {
      // an instance that lands on a lattice is not a counterexample
    }
  }
}
