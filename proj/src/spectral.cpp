#include "spinbath/spectral.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace spinbath {
namespace {

// x / (e^x - 1) for x >= 0, accurate through the removable singularity.
double bose_kernel(double x) {
  if (x < 1e-3) {
    const double x2 = x * x;
    // Bernoulli expansion; next term x^6/30240 is below 4e-23 at the switch.
    return 1.0 - 0.5 * x + x2 / 12.0 - x2 * x2 / 720.0;
  }
  return x / std::expm1(x);
}

}  // namespace

double planck_weight(double k, double beta) {
  const double x = beta * std::abs(k);
  if (x == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / std::expm1(x);
}

double spectral_density(double omega, const CutoffFunction& cutoff) {
  if (omega < 0.0) throw std::invalid_argument("spectral density needs omega >= 0");
  return 2.0 * omega * cutoff.chi2(omega);
}

SpectralFunctions::SpectralFunctions(double beta_in, CutoffFunction cutoff_in)
    : beta(beta_in), cutoff(cutoff_in) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
}

double SpectralFunctions::f1(double k) const {
  const double a = std::abs(k);
  return cutoff.chi2(k) * bose_kernel(beta * a) / beta;
}

double SpectralFunctions::f2(double k) const {
  return std::abs(k) * cutoff.chi2(k);
}

double SpectralFunctions::f3(double k) const {
  return k * cutoff.chi2(k);
}

double SpectralFunctions::even_part(double k) const {
  const double a = std::abs(k);
  return cutoff.chi2(k) * (bose_kernel(beta * a) / beta + 0.5 * a);
}

}  // namespace spinbath
