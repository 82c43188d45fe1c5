#include "spinbath/cutoff.hpp"

#include <cmath>
#include <stdexcept>

#include "spinbath/types.hpp"

namespace spinbath {

const char* family_name(CutoffFamily family) {
  switch (family) {
    case CutoffFamily::kGaussian: return "gaussian";
    case CutoffFamily::kExponential: return "exponential";
    case CutoffFamily::kAlgebraic: return "algebraic";
  }
  return "unknown";
}

CutoffFamily parse_family(const std::string& name) {
  if (name == "gaussian") return CutoffFamily::kGaussian;
  if (name == "exponential") return CutoffFamily::kExponential;
  if (name == "algebraic") return CutoffFamily::kAlgebraic;
  throw std::invalid_argument("unknown cutoff family: " + name);
}

CutoffFunction::CutoffFunction(CutoffFamily family, double k0, double p)
    : family_(family), k0_(k0), p_(p) {
  if (!(k0 > 0.0)) throw std::invalid_argument("cutoff scale k0 must be positive");
  if (family == CutoffFamily::kAlgebraic && !(p > 2.0))
    throw std::invalid_argument("algebraic cutoff needs exponent p > 2 for an integrable tail");
}

CutoffFunction CutoffFunction::gaussian(double k0) {
  return CutoffFunction(CutoffFamily::kGaussian, k0, 0.0);
}

CutoffFunction CutoffFunction::exponential(double k0) {
  return CutoffFunction(CutoffFamily::kExponential, k0, 0.0);
}

CutoffFunction CutoffFunction::algebraic(double k0, double p) {
  return CutoffFunction(CutoffFamily::kAlgebraic, k0, p);
}

CutoffFunction CutoffFunction::make(CutoffFamily family, double k0, double p) {
  switch (family) {
    case CutoffFamily::kGaussian: return gaussian(k0);
    case CutoffFamily::kExponential: return exponential(k0);
    case CutoffFamily::kAlgebraic: return algebraic(k0, p);
  }
  throw std::invalid_argument("unknown cutoff family");
}

double CutoffFunction::operator()(double k) const {
  const double u = k / k0_;
  switch (family_) {
    case CutoffFamily::kGaussian:
      return std::exp(-0.5 * u * u);
    case CutoffFamily::kExponential:
      return 1.0 / std::cosh(u);  // overflows of cosh give 0, which is wanted
    case CutoffFamily::kAlgebraic:
      return std::pow(1.0 + u * u, -0.5 * p_);
  }
  return 0.0;
}

double CutoffFunction::chi2(double k) const {
  const double u = k / k0_;
  switch (family_) {
    case CutoffFamily::kGaussian:
      return std::exp(-u * u);
    case CutoffFamily::kExponential: {
      const double s = 1.0 / std::cosh(u);
      return s * s;
    }
    case CutoffFamily::kAlgebraic:
      return std::pow(1.0 + u * u, -p_);
  }
  return 0.0;
}

double CutoffFunction::chi2_tail(double K) const {
  const double u = K / k0_;
  switch (family_) {
    case CutoffFamily::kGaussian:
      // int_K^inf e^{-x^2/k0^2} dx <= (k0^2 / 2K) e^{-K^2/k0^2}
      return (k0_ * k0_ / (2.0 * K)) * std::exp(-u * u);
    case CutoffFamily::kExponential:
      // exact: int_K^inf sech^2(x/k0) dx = k0 (1 - tanh(K/k0))
      return k0_ * (1.0 - std::tanh(u));
    case CutoffFamily::kAlgebraic:
      // (1 + u^2)^{-p} <= u^{-2p}
      return k0_ * std::pow(u, 1.0 - 2.0 * p_) / (2.0 * p_ - 1.0);
  }
  return 0.0;
}

double CutoffFunction::k_chi2_tail(double K) const {
  const double u = K / k0_;
  switch (family_) {
    case CutoffFamily::kGaussian:
      // exact: int_K^inf x e^{-x^2/k0^2} dx = (k0^2/2) e^{-K^2/k0^2}
      return 0.5 * k0_ * k0_ * std::exp(-u * u);
    case CutoffFamily::kExponential:
      // sech^2(u) <= 4 e^{-2u}: int_K^inf 4x e^{-2x/k0} dx
      return std::exp(-2.0 * u) * (2.0 * k0_ * K + k0_ * k0_);
    case CutoffFamily::kAlgebraic:
      // exact: int_K^inf x (1+(x/k0)^2)^{-p} dx
      return 0.5 * k0_ * k0_ / (p_ - 1.0) * std::pow(1.0 + u * u, 1.0 - p_);
  }
  return 0.0;
}

double CutoffFunction::mass_cutoff(double tail_tol) const {
  if (!(tail_tol > 0.0)) throw std::invalid_argument("tail tolerance must be positive");
  switch (family_) {
    case CutoffFamily::kGaussian:
      return k0_ * std::sqrt(2.0 * std::log(1.0 / tail_tol));
    case CutoffFamily::kAlgebraic: {
      const double base = 0.5 * k0_ * k0_ / ((p_ - 1.0) * tail_tol);
      return k0_ * std::sqrt(std::max(0.0, std::pow(base, 1.0 / (p_ - 1.0)) - 1.0)) + k0_;
    }
    case CutoffFamily::kExponential: {
      // fixed point of K = (k0/2) log((2 k0 K + k0^2)/tol)
      double K = 8.0 * k0_;
      for (int iter = 0; iter < 64; ++iter)
        K = 0.5 * k0_ * std::log((2.0 * k0_ * K + k0_ * k0_) / tail_tol);
      return K;
    }
  }
  return 0.0;
}

double CutoffFunction::chi2_cutoff(double tail_tol) const {
  if (!(tail_tol > 0.0)) throw std::invalid_argument("tail tolerance must be positive");
  double K = k0_;
  while (chi2_tail(K) > tail_tol) {
    K *= 2.0;
    if (K > 1e12 * k0_)
      throw QuadratureError("chi^2 tail does not reach the requested tolerance", chi2_tail(K));
  }
  return K;
}

}  // namespace spinbath
