#include "bilateral/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bilateral/binomial.hpp"
#include "bilateral/detail/outward_sum.hpp"
#include "bilateral/errors.hpp"
#include "bilateral/gamma.hpp"

namespace bilateral {

namespace {

constexpr double kUnitTolerance = 1e-12;
constexpr std::int64_t kGuardInterval = 10'000;
constexpr long double kGuardDrift = 1e-12L;
constexpr int kSmallRunRequired = 3;
constexpr std::int64_t kFirstCheckpoint = 8;
constexpr double kInf = std::numeric_limits<double>::infinity();

using ComplexL = std::complex<long double>;

// Plain complex product; std::complex routes through the Annex G helper,
// which dominates the inner loop.
ComplexL mul(const ComplexL& a, const ComplexL& b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

struct CompensatedReal {
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

struct CompensatedComplex {
  CompensatedReal re;
  CompensatedReal im;

  void add(const ComplexL& v) {
    re.add(v.real());
    im.add(v.imag());
  }
  ComplexL total() const { return {re.total(), im.total()}; }
};

struct FactorProduct {
  long double value = 1;
  bool has_zero = false;
};

// prod(params + shift) with lattice zeros flagged rather than multiplied in.
FactorProduct product_at(const std::vector<long double>& params, long double shift) {
  FactorProduct out;
  for (long double p : params) {
    const long double f = p + shift;
    if (std::abs(f) <= kLatticeTolerance) {
      out.has_zero = true;
      continue;
    }
    out.value *= f;
  }
  return out;
}

struct Side {
  bool alive = true;
  long double coefficient = 0;
  long double previous = 0;
  ComplexL phase{1, 0};
  ComplexL step{1, 0};
  ComplexL term;
  ComplexL previous_term;
};

struct Checkpoint {
  std::int64_t index;
  ComplexL estimate;
  long double magnitude;  // |c_N| + |c_-N|
};

struct TailModel {
  ComplexL correction{0, 0};
  bool corrected = false;
  long double bound = 0;
};

bool is_algebraic(const detail::RatioProfile& profile, Complex z) {
  return std::abs(static_cast<double>(profile.sign) * z - 1.0) <= kUnitTolerance;
}

std::string where(std::int64_t index) { return "at index " + std::to_string(index); }

}  // namespace

std::string_view to_string(Convergence c) {
  switch (c) {
    case Convergence::absolute: return "absolute";
    case Convergence::conditional: return "conditional";
    case Convergence::divergent: return "divergent";
    case Convergence::terminating: return "terminating";
  }
  return "unknown";
}

std::string_view to_string(Acceleration a) {
  return a == Acceleration::paired_aitken ? "paired-aitken" : "none";
}

Acceleration parse_acceleration(std::string_view name) {
  if (name == "none") return Acceleration::none;
  if (name == "paired-aitken") return Acceleration::paired_aitken;
  throw InvalidArgumentError("unknown acceleration '" + std::string(name) + "'");
}

void TruncationPolicy::validate() const {
  if (!(rel_tolerance > 0) || !std::isfinite(rel_tolerance))
    throw InvalidArgumentError("rel_tolerance must be positive");
  if (max_half_width < 8) throw InvalidArgumentError("max_half_width must be at least 8");
}

Complex power_principal(Complex w, double e) {
  if (w == Complex(0.0, 0.0)) {
    if (e > 0) return {0.0, 0.0};
    throw InvalidArgumentError("power_principal: zero base with non-positive exponent");
  }
  if (w.imag() == 0.0) {
    if (w.real() > 0) return {std::pow(w.real(), e), 0.0};
    w = {w.real(), 0.0};  // -0.0 would select the -pi branch
  }
  return std::polar(std::pow(std::abs(w), e), e * std::arg(w));
}

Complex unit_circle(double theta) { return std::polar(1.0, theta); }

namespace detail {

double RatioProfile::decay_exponent() const {
  double s = 0;
  for (double u : upper) s += u;
  for (double l : lower) s -= l;
  return s;
}

RatioProfile cancel_matching(std::vector<double> upper, std::vector<double> lower, int sign) {
  RatioProfile out;
  out.sign = sign;
  std::vector<bool> used(lower.size(), false);
  for (double u : upper) {
    bool matched = false;
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (!used[j] && std::abs(u - lower[j]) <= kLatticeTolerance) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) out.upper.push_back(u);
  }
  for (std::size_t j = 0; j < lower.size(); ++j)
    if (!used[j]) out.lower.push_back(lower[j]);
  return out;
}

Termination static_termination(const RatioProfile& profile) {
  constexpr auto none = std::numeric_limits<long long>::max();
  // Forward: the ratio at nu has factors (u + nu) / (l + nu), nu >= 0.
  long long forward_zero = none, forward_pole = none;
  for (double u : profile.upper)
    if (near_integer(u) && std::llround(u) <= 0) forward_zero = std::min(forward_zero, -std::llround(u));
  for (double l : profile.lower)
    if (near_integer(l) && std::llround(l) <= 0) forward_pole = std::min(forward_pole, -std::llround(l));
  // Backward: factors (l + nu - 1) / (u + nu - 1), nu <= 0.
  long long backward_zero = none, backward_pole = none;
  for (double l : profile.lower)
    if (near_integer(l) && std::llround(l) >= 1) backward_zero = std::min(backward_zero, std::llround(l) - 1);
  for (double u : profile.upper)
    if (near_integer(u) && std::llround(u) >= 1) backward_pole = std::min(backward_pole, std::llround(u) - 1);
  return {forward_zero != none && forward_zero <= forward_pole,
          backward_zero != none && backward_zero <= backward_pole};
}

void require_unit_modulus(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
      std::abs(std::abs(z) - 1.0) > kUnitTolerance)
    throw InvalidArgumentError("bilateral series need |z| = 1");
}

Convergence classify(const RatioProfile& profile, Complex z) {
  require_unit_modulus(z);
  const auto ends = static_termination(profile);
  if (ends.forward && ends.backward) return Convergence::terminating;
  const double s = profile.decay_exponent();
  if (s < -1.0) return Convergence::absolute;
  if (s < 0.0 && !is_algebraic(profile, z)) return Convergence::conditional;
  return Convergence::divergent;
}

SeriesResult sum_outward(const RatioProfile& profile, long double t0, Complex z,
                         const TruncationPolicy& policy, const ExactCoefficient& exact) {
  policy.validate();
  const Convergence classification = classify(profile, z);
  if (classification == Convergence::divergent)
    throw DivergentSeriesError("bilateral series diverges (decay exponent " +
                               std::to_string(profile.decay_exponent()) + ")");
  if (classification == Convergence::conditional && !policy.allow_conditional)
    throw ConditionalRefusedError("series converges only conditionally; enable allow_conditional");
  if (t0 == 0 || !std::isfinite(t0)) throw DegenerateParameterError("series anchor term is not a finite nonzero value");

  z /= std::abs(z);
  const ComplexL zl{z.real(), z.imag()};
  const bool exact_phase = z.imag() == 0.0;
  const long double theta = std::atan2(static_cast<long double>(z.imag()), static_cast<long double>(z.real()));
  const bool algebraic = is_algebraic(profile, z);
  const bool aitken = !algebraic && policy.acceleration == Acceleration::paired_aitken;
  const long double sign = profile.sign;
  const long double tol = policy.rel_tolerance;
  const long double term_tol = tol / 10;

  std::vector<long double> upper(profile.upper.begin(), profile.upper.end());
  std::vector<long double> lower(profile.lower.begin(), profile.lower.end());

  Side forward, backward;
  for (Side* s : {&forward, &backward}) {
    s->coefficient = s->previous = t0;
    s->term = s->previous_term = ComplexL(t0, 0);
  }
  forward.step = zl;
  backward.step = std::conj(zl);

  CompensatedComplex sum;
  sum.add(ComplexL(t0, 0));
  std::int64_t terms_used = 1;

  // Tail model for one side at half-width n; see TruncationPolicy.
  auto side_tail = [&](const Side& s, std::int64_t n, TailModel& tail) {
    if (!s.alive) return;
    if (algebraic) {
      const long double local_s =
          std::log(std::abs(s.coefficient / s.previous)) / std::log(static_cast<long double>(n) / (n - 1));
      if (!(local_s < -1)) {
        tail.bound = std::numeric_limits<long double>::infinity();
        return;
      }
      const long double reach = static_cast<long double>(n) / (-local_s - 1);
      if (policy.tail_estimation) {
        tail.correction += s.term * (reach - 0.5L);
        tail.corrected = true;
      } else {
        tail.bound += std::abs(s.term) * reach;
      }
      return;
    }
    const ComplexL rho = s.term / s.previous_term;
    if (aitken) {
      tail.correction += s.term * rho / (ComplexL(1, 0) - rho);
      tail.corrected = true;
    } else {
      tail.bound += std::abs(s.term) / std::abs(ComplexL(1, 0) - rho);
    }
  };

  std::vector<Checkpoint> history;
  std::int64_t next_checkpoint = kFirstCheckpoint;
  int small_run = 0;
  ComplexL previous_estimate = sum.total();
  ComplexL estimate = previous_estimate;
  long double tail_estimate = std::numeric_limits<long double>::infinity();
  bool converged = false;
  bool terminated = false;
  std::int64_t last_index = 0;

  for (std::int64_t nu = 1; nu <= policy.max_half_width; ++nu) {
    last_index = nu;
    const long double shift = static_cast<long double>(nu - 1);

    if (forward.alive) {
      const auto num = product_at(upper, shift);
      const auto den = product_at(lower, shift);
      forward.previous = forward.coefficient;
      forward.previous_term = forward.term;
      if (num.has_zero) {
        forward.alive = false;
        forward.coefficient = 0;
        forward.term = 0;
      } else if (den.has_zero) {
        throw DegenerateParameterError("interior pole in the series " + where(nu));
      } else {
        forward.coefficient *= sign * num.value / den.value;
        forward.phase = mul(forward.phase, forward.step);
      }
    }
    if (backward.alive) {
      const auto num = product_at(lower, -shift - 1);
      const auto den = product_at(upper, -shift - 1);
      backward.previous = backward.coefficient;
      backward.previous_term = backward.term;
      if (num.has_zero) {
        backward.alive = false;
        backward.coefficient = 0;
        backward.term = 0;
      } else if (den.has_zero) {
        throw DegenerateParameterError("interior pole in the series " + where(-nu));
      } else {
        backward.coefficient *= sign * num.value / den.value;
        backward.phase = mul(backward.phase, backward.step);
      }
    }

    if (nu % kGuardInterval == 0) {
      for (auto [side, index] : {std::pair{&forward, nu}, std::pair{&backward, -nu}}) {
        if (!side->alive) continue;
        if (auto reference = exact(index); reference && reference->sign != 0) {
          const auto current = SignedLog<long double>::from_value(side->coefficient);
          if (relative_distance(current, *reference) > kGuardDrift) side->coefficient = reference->value();
        }
        if (!exact_phase) side->phase = std::polar(1.0L, theta * static_cast<long double>(index));
      }
    }

    for (Side* s : {&forward, &backward}) {
      if (!s->alive) continue;
      if (s->coefficient == 0) {  // underflow
        s->alive = false;
        s->term = 0;
        continue;
      }
      s->term = s->phase * s->coefficient;
      ++terms_used;
    }
    sum.add(forward.term + backward.term);

    if (!forward.alive && !backward.alive) {
      terminated = true;
      break;
    }

    bool small;
    if (aitken) {
      TailModel tail;
      side_tail(forward, nu, tail);
      side_tail(backward, nu, tail);
      estimate = sum.total() + tail.correction;
      small = std::abs(estimate - previous_estimate) <= term_tol * std::abs(estimate);
      previous_estimate = estimate;
    } else {
      const long double largest = std::max(std::abs(forward.term), std::abs(backward.term));
      small = largest <= term_tol * std::abs(sum.total());
    }
    small_run = small ? small_run + 1 : 0;

    if (nu == next_checkpoint || nu == policy.max_half_width) {
      next_checkpoint = std::max(next_checkpoint + 1,
                                 static_cast<std::int64_t>(std::llround(next_checkpoint * std::numbers::sqrt2)));
      TailModel tail;
      side_tail(forward, nu, tail);
      side_tail(backward, nu, tail);
      estimate = sum.total() + tail.correction;
      long double uncertainty = tail.bound;
      if (tail.corrected) {
        uncertainty += history.size() >= 2 ? std::abs(estimate - history[history.size() - 2].estimate)
                                            : std::numeric_limits<long double>::infinity();
      }
      tail_estimate = uncertainty;
      history.push_back({nu, estimate, std::abs(forward.coefficient) + std::abs(backward.coefficient)});
      if (small_run >= kSmallRunRequired && tail_estimate <= tol * std::abs(estimate)) {
        converged = true;
        break;
      }
    }
  }

  SeriesResult result;
  result.terms_used = terms_used;
  if (terminated) {
    const ComplexL total = sum.total();
    result.value = {static_cast<double>(total.real()), static_cast<double>(total.imag())};
    result.converged = true;
    result.tail_estimate = 0.0;
    result.decay_exponent = std::numeric_limits<double>::quiet_NaN();
    result.classification = Convergence::terminating;
    return result;
  }
  if (history.empty() || history.back().index != last_index) {
    // Only reached when the loop ends between checkpoints, which cannot
    // happen since max_half_width is itself a checkpoint.
    estimate = sum.total();
  }
  result.value = {static_cast<double>(estimate.real()), static_cast<double>(estimate.imag())};
  result.converged = converged;
  result.tail_estimate = static_cast<double>(tail_estimate);
  result.classification = classification;
  if (history.size() >= 2) {
    const auto& last = history.back();
    const auto& base = history[history.size() >= 3 ? history.size() - 3 : 0];
    result.decay_exponent = static_cast<double>(
        std::log(last.magnitude / base.magnitude) /
        std::log(static_cast<long double>(last.index) / base.index));
  } else {
    result.decay_exponent = profile.decay_exponent();
  }
  return result;
}

}  // namespace detail

Convergence classify_convergence(const BilateralSeriesSpec& spec) {
  if (spec.upper.size() != spec.lower.size())
    throw InvalidArgumentError("upper and lower parameter lists must have equal length");
  return detail::classify(detail::cancel_matching(spec.upper, spec.lower, 1), spec.z);
}

SeriesResult eval_bilateral(const BilateralSeriesSpec& spec, const TruncationPolicy& policy) {
  if (spec.upper.size() != spec.lower.size())
    throw InvalidArgumentError("upper and lower parameter lists must have equal length");
  for (double v : spec.upper)
    if (!std::isfinite(v)) throw InvalidArgumentError("non-finite upper parameter");
  for (double v : spec.lower)
    if (!std::isfinite(v)) throw InvalidArgumentError("non-finite lower parameter");

  const auto profile = detail::cancel_matching(spec.upper, spec.lower, 1);
  auto exact = [&profile](std::int64_t nu) -> std::optional<SignedLog<long double>> {
    try {
      auto c = SignedLog<long double>::one();
      for (double u : profile.upper) c *= detail::pochhammer_extended(u, nu);
      for (double l : profile.lower) {
        const auto d = detail::pochhammer_extended(l, nu);
        if (d.sign == 0) return std::nullopt;
        c /= d;
      }
      return c;
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  return detail::sum_outward(profile, 1.0L, spec.z, policy, exact);
}

namespace {

// The coefficient at lattice offset j, or zero when it vanishes.
long double binomial_value(double x, double y) { return detail::binom_extended(x, y).value(); }

std::optional<SignedLog<long double>> binomial_or_none(double x, double y) {
  try {
    return detail::binom_extended(x, y);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

SeriesResult bilateral_binomial_sum(double x, double y, Complex z, const TruncationPolicy& policy) {
  detail::require_unit_modulus(z);
  if (std::abs(z + 1.0) <= kUnitTolerance)
    throw InvalidArgumentError("bilateral binomial sum is undefined at z = -1");
  if (!std::isfinite(x) || !std::isfinite(y)) throw InvalidArgumentError("x and y must be finite");

  // C(x, y) vanishes only when y or x - y is an integer; shift the anchor
  // onto the lower or upper edge of the support in that case.
  double anchor = y;
  if (binomial_value(x, y) == 0) {
    anchor = near_integer(y) ? y - std::round(y) : y + std::round(x - y);
  }
  const long double t0 = binomial_value(x, anchor);
  if (t0 == 0) throw DegenerateParameterError("bilateral binomial sum has no nonzero anchor term");

  // C(x, y+k+1) / C(x, y+k) = -(k + y - x) / (k + y + 1)
  const auto profile = detail::cancel_matching({anchor - x}, {anchor + 1.0}, -1);
  auto exact = [x, anchor](std::int64_t k) { return binomial_or_none(x, anchor + static_cast<double>(k)); };
  auto result = detail::sum_outward(profile, t0, z, policy, exact);
  result.value *= power_principal(z, anchor);
  return result;
}

SeriesResult vandermonde_convolution_sum(double n, double p, double K, double M0,
                                         const TruncationPolicy& policy) {
  for (double v : {n, p, K, M0})
    if (!std::isfinite(v)) throw InvalidArgumentError("convolution parameters must be finite");
  auto term = [&](double M) -> long double {
    try {
      return (detail::binom_extended(n - p, K - M) * detail::binom_extended(p, M)).value();
    } catch (const Error& e) {
      throw DegenerateParameterError(std::string("indeterminate convolution term: ") + e.what());
    }
  };

  double anchor = M0;
  long double t0 = term(anchor);
  for (int j = 1; t0 == 0 && j <= 64; ++j) {
    for (double candidate : {M0 + j, M0 - j}) {
      if (const long double t = term(candidate); t != 0) {
        anchor = candidate;
        t0 = t;
        break;
      }
    }
  }
  if (t0 == 0) throw DegenerateParameterError("no nonzero convolution term near the offset");

  // ratio (K-M-j)(p-M-j) / ((n-p-K+M+j+1)(M+j+1)) in the increasing direction
  const auto profile =
      detail::cancel_matching({anchor - K, anchor - p}, {n - p - K + anchor + 1.0, anchor + 1.0}, 1);
  auto exact = [n, p, K, anchor](std::int64_t j) -> std::optional<SignedLog<long double>> {
    const double M = anchor + static_cast<double>(j);
    auto left = binomial_or_none(n - p, K - M);
    auto right = binomial_or_none(p, M);
    if (!left || !right) return std::nullopt;
    return *left * *right;
  };
  return detail::sum_outward(profile, t0, Complex(1.0, 0.0), policy, exact);
}

}  // namespace bilateral
