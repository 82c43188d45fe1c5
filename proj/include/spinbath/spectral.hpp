// spectral.hpp — Planck-weighted spectral functions of the phonon bath.

#pragma once

#include "spinbath/cutoff.hpp"

namespace spinbath {

// Bose–Einstein occupation 1/(e^{beta |k|} - 1); diverges like 1/(beta |k|)
// at the origin, which the |k| prefactors below cancel.
double planck_weight(double k, double beta);

// Spectral density J(omega) = 2 omega chi^2(omega); linear (ohmic) near zero
// with J(omega)/omega -> 2.
double spectral_density(double omega, const CutoffFunction& cutoff);

struct SpectralFunctions {
  double beta;
  CutoffFunction cutoff;

  SpectralFunctions(double beta_in, CutoffFunction cutoff_in);

  // f1 = |k| chi^2 / (e^{beta|k|} - 1), even; the k = 0 singularity is
  // removable and filled with its limit chi(0)^2 / beta.
  double f1(double k) const;
  // f2 = |k| chi^2, even.
  double f2(double k) const;
  // f3 = k chi^2, odd.
  double f3(double k) const;
  // f1 + f2/2: the even weight whose cosine transform is Re C(t). Equals
  // (|k|/2) coth(beta |k|/2) chi^2, smooth at the origin.
  double even_part(double k) const;
};

}  // namespace spinbath
