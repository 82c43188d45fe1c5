#include "spinbath/random.hpp"

namespace spinbath {
namespace {

Eigen::MatrixXcd gaussian_matrix(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (Eigen::Index j = 0; j < g.cols(); ++j)
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

}  // namespace

Observable random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  const Eigen::MatrixXcd g = gaussian_matrix(dim, rng);
  return 0.5 * (g + g.adjoint());
}

DensityMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
  const Eigen::MatrixXcd g = gaussian_matrix(dim, rng);
  DensityMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

}  // namespace spinbath
