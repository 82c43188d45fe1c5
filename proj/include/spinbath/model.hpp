// model.hpp — truncated spin chain, collective coupling operator Q, and the
// basis-index conventions every other module relies on.
//
// Basis convention: index i in [0, 2^n) spells the spin configuration with
// site 1 as the most significant bit. Bit value 0 is spin up (sigma^3
// eigenvalue +1), bit value 1 is spin down (-1). Under this ordering the Q
// eigenvalues form an arithmetic progression and q_i - q_j = (j - i)/2^(n-1).

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spinbath/types.hpp"

namespace spinbath {

struct SpinConfiguration {
  std::vector<std::uint8_t> bits;  // bits[m-1] belongs to site m

  static SpinConfiguration from_index(std::size_t index, int n_sites);
  std::size_t to_index() const;
  int n_sites() const { return static_cast<int>(bits.size()); }
};

class SpinChainModel {
 public:
  // n_sites >= 1, lambda > 0, beta > 0 (hbar = c = k_B = 1 throughout).
  SpinChainModel(int n_sites, double lambda, double beta);

  int n_sites() const { return n_sites_; }
  double lambda() const { return lambda_; }
  double beta() const { return beta_; }
  // Dephasing rate pi*lambda/beta; always recomputed, never stored.
  double gamma() const { return kPi * lambda_ / beta_; }
  std::size_t dim() const { return std::size_t{1} << n_sites_; }

 private:
  int n_sites_;
  double lambda_;
  double beta_;
};

// Throws std::length_error when 2^n exceeds the dense-matrix limit.
void check_dense_size(int n_sites);

// Sum over sites of s_m / 2^m with s_m = +/-1 read off the configuration.
double q_eigenvalue(const SpinConfiguration& config);

// q_i - q_j for 0-based basis indices; equals (j - i)/2^(n-1) exactly.
double eigenvalue_gap(std::size_t i, std::size_t j, int n_sites);

// All 2^n eigenvalues of Q in basis order.
Eigen::VectorXd q_spectrum(const SpinChainModel& model);

// Q as a diagonal matrix; Hermitian with operator norm 1 - 2^{-n}.
Observable build_q_matrix(const SpinChainModel& model);

}  // namespace spinbath
