#include "spinbath/bath.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "spinbath/quadrature.hpp"

namespace spinbath {
namespace {

// Truncation budget for the momentum integrals.
constexpr double kTailBudget = 1e-12;

double envelope(const SpectralFunctions& spec, double k) {
  return 2.0 * spec.even_part(k) + std::abs(spec.f3(k));
}

// For |t| >= 1 the oscillatory tail beyond K is bounded by ~4 env(K)/|t|
// (alternating-series bound for a monotone envelope), which lets the slow
// algebraic tails be cut earlier than the plain mass bound allows.
double oscillation_cutoff(const SpectralFunctions& spec, double t_abs, double k_mass) {
  double lo = 4.0 * (spec.cutoff.scale() + 1.0 / spec.beta);  // past the spectral peak
  if (lo >= k_mass) return k_mass;
  auto bound = [&](double k) { return 4.0 * envelope(spec, k) / t_abs; };
  if (bound(lo) <= kTailBudget) return lo;
  if (bound(k_mass) > kTailBudget) return k_mass;
  double hi = k_mass;
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (bound(mid) <= kTailBudget)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

double momentum_cutoff(const SpectralFunctions& spec, double t_abs) {
  const double k_mass = spec.cutoff.mass_cutoff(kTailBudget);
  if (t_abs < 1.0) return k_mass;
  return std::min(k_mass, oscillation_cutoff(spec, t_abs, k_mass));
}

std::size_t oscillatory_panels(double K, double t_abs) {
  // Keep the phase change per panel at or below pi/4.
  const double needed = std::ceil(K * t_abs * 4.0 / kPi);
  return static_cast<std::size_t>(std::clamp(needed, 4.0, 400000.0));
}

}  // namespace

Complex correlation_function(double t, const SpectralFunctions& spec, double abs_tol) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be positive");
  const double ta = std::abs(t);
  const double K = momentum_cutoff(spec, ta);
  QuadratureOptions opts;
  opts.abs_tol = abs_tol;
  opts.initial_panels = oscillatory_panels(K, ta);
  opts.max_panels = opts.initial_panels * 4 + 20000;
  auto integrand = [&spec, t](double k) {
    return Complex(2.0 * spec.even_part(k) * std::cos(k * t),
                   -spec.f3(k) * std::sin(k * t));
  };
  return integrate(integrand, 0.0, K, opts).value;
}

BathCoefficients coefficient_a(const SpectralFunctions& spec, AMethod method) {
  BathCoefficients out;
  if (method == AMethod::kClosedForm) {
    out.a = 2.0 * kPi / spec.beta;
    return out;
  }
  // Limit along k -> 0+ of 2 pi f1 + pi f2, accelerated by two Richardson
  // steps (the expansion has a linear |k| term).
  auto g = [&spec](double k) { return 2.0 * kPi * spec.f1(k) + kPi * spec.f2(k); };
  const double h = 0.01 * std::min(1.0 / spec.beta, spec.cutoff.scale());
  const double g1 = g(h), g2 = g(0.5 * h), g3 = g(0.25 * h);
  const double r1 = 2.0 * g2 - g1;
  const double r2 = 2.0 * g3 - g2;
  out.a = (4.0 * r2 - r1) / 3.0;
  out.a_error = std::max(std::abs(out.a - r2), 8.0 * 1e-16 * std::abs(out.a));
  return out;
}

BathCoefficients coefficient_b(const SpectralFunctions& spec, BMethod method,
                               double tol, double t_max) {
  BathCoefficients out;
  if (method == BMethod::kQuadrature) {
    const double K = spec.cutoff.chi2_cutoff(1e-13);
    QuadratureOptions opts;
    opts.abs_tol = 1e-11;
    opts.initial_panels = 16;
    auto r = integrate_real([&spec](double k) { return spec.cutoff.chi2(k); }, 0.0, K, opts);
    out.b = -r.value.real();
    out.b_error = r.error + spec.cutoff.chi2_tail(K);
    return out;
  }
  const double horizon = t_max > 0.0 ? t_max : default_time_horizon(spec, tol);
  const CorrelationIntegral ci = integrate_correlation(spec, horizon, tol);
  out.b = ci.value.imag();
  out.b_error = ci.tail_bound + ci.quad_error;
  return out;
}

CorrelationIntegral integrate_correlation(const SpectralFunctions& spec,
                                          double t_max, double tol) {
  if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

  const double inner_tol = tol / (4.0 * std::max(1.0, t_max));
  auto corr = [&spec, inner_tol](double t) {
    return correlation_function(t, spec, inner_tol);
  };
  // C(t) oscillates no faster than the spectral support; a seed phase of
  // ~4 rad per panel is still exact for the 15-point rule.
  const double k_bar = spec.cutoff.scale() + 1.0 / spec.beta;
  auto part = [&](double a, double b) {
    QuadratureOptions opts;
    opts.abs_tol = 0.25 * tol;
    opts.initial_panels = std::max<std::size_t>(
        8, static_cast<std::size_t>(std::ceil((b - a) * k_bar / 4.0)));
    opts.max_panels = opts.initial_panels * 16 + 4000;
    return integrate(corr, a, b, opts);
  };

  const QuadratureResult head = part(0.0, 0.5 * t_max);
  const QuadratureResult tail = part(0.5 * t_max, t_max);

  CorrelationIntegral out;
  out.value = head.value + tail.value;
  out.tail_bound = std::abs(tail.value);
  out.quad_error = head.error + tail.error;
  out.t_max = t_max;
  if (out.tail_bound > tol)
    throw TailBoundError(
        "tail estimate " + std::to_string(out.tail_bound) + " exceeds tolerance " +
            std::to_string(tol) + "; increase t_max beyond " + std::to_string(t_max),
        out.tail_bound);
  return out;
}

double default_time_horizon(const SpectralFunctions& spec, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  // decay budget: the [T/2, T] window must carry less than tol
  const double budget = std::log(1.0 / std::min(tol, 0.1)) + 4.0;
  const double k0 = spec.cutoff.scale();
  double family = 0.0;
  switch (spec.cutoff.family()) {
    case CutoffFamily::kGaussian:
      family = 4.0 * std::sqrt(budget) / k0;  // transform ~ e^{-t^2 k0^2/4}
      break;
    case CutoffFamily::kExponential:
      family = 4.0 * budget / (kPi * k0);  // nearest singularity at pi k0 / 2
      break;
    case CutoffFamily::kAlgebraic:
      // decay rate k0 with a polynomial prefactor
      family = 2.0 * (budget + 2.0 * std::log(budget)) / k0;
      break;
  }
  const double thermal = budget * spec.beta / kPi;  // coth poles at 2 pi i / beta
  return 1.1 * std::max(family, thermal);
}

}  // namespace spinbath
