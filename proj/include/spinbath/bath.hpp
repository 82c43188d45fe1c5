// bath.hpp — thermal correlation function of the phonon field and the
// generator coefficients (a, b) it determines.
//
// Conventions: C(t) is the sum of the Fourier transforms of f1, f2/2, f3/2
// with kernel e^{-ikt}, reduced by parity to a half-line integral
//   C(t) = 2 int_0^inf (f1 + f2/2) cos(kt) dk - i int_0^inf f3 sin(kt) dk.
// With this sign choice int_0^inf C(t) dt = a/2 + i b holds with
// a = 2 pi / beta > 0 and b = -int_0^inf chi^2 dk < 0, which the test suite
// verifies for every cutoff family.

#pragma once

#include "spinbath/spectral.hpp"
#include "spinbath/types.hpp"

namespace spinbath {

struct BathCoefficients {
  double a = 0.0;
  double b = 0.0;
  double a_error = 0.0;  // zero when closed-form
  double b_error = 0.0;
};

enum class AMethod { kClosedForm, kNumerical };
enum class BMethod { kQuadrature, kCorrelationIntegral };

// C(t) by adaptive quadrature; satisfies C(-t) = conj(C(t)).
Complex correlation_function(double t, const SpectralFunctions& spec,
                             double abs_tol = 1e-10);

// Closed form a = 2 pi / beta, or the inverse-transform value
// 2 pi f1(0+) + pi f2(0+) with the limits taken along k -> 0+.
BathCoefficients coefficient_a(const SpectralFunctions& spec, AMethod method);

// Direct quadrature of -int_0^inf chi^2 dk, or Im int_0^inf C(t) dt.
// t_max = 0 picks a horizon from the decay rate of C.
BathCoefficients coefficient_b(const SpectralFunctions& spec, BMethod method,
                               double tol = 1e-4, double t_max = 0.0);

struct CorrelationIntegral {
  Complex value;
  double tail_bound = 0.0;  // |contribution of [t_max/2, t_max]|
  double quad_error = 0.0;
  double t_max = 0.0;
};

// int_0^{t_max} C(t) dt with a tail estimate from comparing the t_max and
// t_max/2 truncations. Throws TailBoundError when the tail estimate exceeds
// tol (use a larger t_max).
CorrelationIntegral integrate_correlation(const SpectralFunctions& spec,
                                          double t_max, double tol);

// Horizon whose trailing half carries less than tol of the time integral.
double default_time_horizon(const SpectralFunctions& spec, double tol = 1e-6);

}  // namespace spinbath
