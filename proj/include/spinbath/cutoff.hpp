// cutoff.hpp — even, real cutoff families chi(k) with chi(0) = 1.
//
// Three families are provided:
//   gaussian     chi(k) = exp(-k^2 / (2 k0^2))
//   exponential  chi(k) = sech(k / k0), a smooth stand-in for exp(-|k|/k0)
//                whose kink at zero would break differentiability
//   algebraic    chi(k) = (1 + (k/k0)^2)^(-p/2), p > 2
// All decay faster than |k|^(-2-eps), which keeps the thermal correlation
// function integrable in time.

#pragma once

#include <string>

namespace spinbath {

enum class CutoffFamily { kGaussian, kExponential, kAlgebraic };

const char* family_name(CutoffFamily family);
CutoffFamily parse_family(const std::string& name);

class CutoffFunction {
 public:
  static CutoffFunction gaussian(double k0);
  static CutoffFunction exponential(double k0);
  static CutoffFunction algebraic(double k0, double p);
  static CutoffFunction make(CutoffFamily family, double k0, double p = 3.0);

  double operator()(double k) const;  // chi(k)
  double chi2(double k) const;        // chi(k)^2

  CutoffFamily family() const { return family_; }
  double scale() const { return k0_; }
  double exponent() const { return p_; }

  // Analytic upper bounds on chi^2 tails, used to truncate [0, inf) integrals.
  double chi2_tail(double K) const;    // >= int_K^inf chi^2 dk
  double k_chi2_tail(double K) const;  // >= int_K^inf k chi^2 dk

  // Smallest K with the respective tail bound below tail_tol.
  double mass_cutoff(double tail_tol) const;  // k-weighted tail (spectral mass)
  double chi2_cutoff(double tail_tol) const;  // plain chi^2 tail

 private:
  CutoffFunction(CutoffFamily family, double k0, double p);

  CutoffFamily family_;
  double k0_;
  double p_;
};

}  // namespace spinbath
