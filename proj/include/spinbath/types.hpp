// types.hpp — shared aliases, numeric constants, and error types

#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spinbath {

using Complex = std::complex<double>;

// Dense operator in the sigma^3 product eigenbasis, dimension 2^n.
using Observable = Eigen::MatrixXcd;

// Statistical state: Hermitian, positive, unit trace. Same storage as an
// Observable; validity is checked where it matters, not encoded in the type.
using DensityMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = std::numbers::pi;

// Largest chain length handled with dense 2^n x 2^n complex matrices.
inline constexpr int kMaxDenseSites = 12;

inline constexpr const char* kVersion = "1.0.0";

// Adaptive quadrature could not reach the requested tolerance; carries the
// error estimate that was actually achieved.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

// Tail of a truncated time integral exceeds the requested tolerance.
class TailBoundError : public std::runtime_error {
 public:
  TailBoundError(const std::string& what, double tail_bound)
      : std::runtime_error(what), tail_bound_(tail_bound) {}
  double tail_bound() const noexcept { return tail_bound_; }

 private:
  double tail_bound_;
};

// The limit-theorem distance did not fall below tolerance within the
// sampled horizon; carries the smallest distance that was reached.
class HorizonError : public std::runtime_error {
 public:
  HorizonError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace spinbath
