#include "spinbath/model.hpp"

#include <stdexcept>
#include <string>

namespace spinbath {

SpinConfiguration SpinConfiguration::from_index(std::size_t index, int n_sites) {
  if (n_sites < 1) throw std::invalid_argument("n_sites must be at least 1");
  if (index >= (std::size_t{1} << n_sites))
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " out of range for " + std::to_string(n_sites) + " sites");
  SpinConfiguration config;
  config.bits.resize(static_cast<std::size_t>(n_sites));
  for (int m = 1; m <= n_sites; ++m)
    config.bits[m - 1] = static_cast<std::uint8_t>((index >> (n_sites - m)) & 1u);
  return config;
}

std::size_t SpinConfiguration::to_index() const {
  std::size_t index = 0;
  for (std::uint8_t bit : bits) index = (index << 1) | bit;
  return index;
}

SpinChainModel::SpinChainModel(int n_sites, double lambda, double beta)
    : n_sites_(n_sites), lambda_(lambda), beta_(beta) {
  if (n_sites < 1) throw std::invalid_argument("n_sites must be at least 1");
  if (n_sites > 62) throw std::invalid_argument("n_sites too large for 64-bit indexing");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
}

void check_dense_size(int n_sites) {
  if (n_sites > kMaxDenseSites)
    throw std::length_error("dense operators are limited to " +
                            std::to_string(kMaxDenseSites) + " sites (2^" +
                            std::to_string(kMaxDenseSites) + " dimensions); got n_sites = " +
                            std::to_string(n_sites));
}

double q_eigenvalue(const SpinConfiguration& config) {
  double value = 0.0;
  double weight = 1.0;
  for (std::uint8_t bit : config.bits) {
    weight *= 0.5;  // 1/2^m at site m
    value += bit ? -weight : weight;
  }
  return value;
}

double eigenvalue_gap(std::size_t i, std::size_t j, int n_sites) {
  const std::size_t dim = std::size_t{1} << n_sites;
  if (i >= dim || j >= dim) throw std::out_of_range("basis index out of range");
  return q_eigenvalue(SpinConfiguration::from_index(i, n_sites)) -
         q_eigenvalue(SpinConfiguration::from_index(j, n_sites));
}

Eigen::VectorXd q_spectrum(const SpinChainModel& model) {
  const std::size_t dim = model.dim();
  Eigen::VectorXd q(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    q[static_cast<Eigen::Index>(i)] =
        q_eigenvalue(SpinConfiguration::from_index(i, model.n_sites()));
  return q;
}

Observable build_q_matrix(const SpinChainModel& model) {
  check_dense_size(model.n_sites());
  const Eigen::VectorXd q = q_spectrum(model);
  Observable m = Observable::Zero(q.size(), q.size());
  for (Eigen::Index i = 0; i < q.size(); ++i) m(i, i) = q[i];
  return m;
}

}  // namespace spinbath
