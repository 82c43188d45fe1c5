#include "spinbath/pointer.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spinbath {

DiagonalObservable diagonal_projection(const Observable& x) {
  if (x.rows() != x.cols()) throw std::invalid_argument("observable must be square");
  return {x.diagonal()};
}

Observable to_matrix(const DiagonalObservable& diag) {
  const Eigen::Index dim = diag.values.size();
  Observable m = Observable::Zero(dim, dim);
  m.diagonal() = diag.values;
  return m;
}

Complex measure_trace(const DiagonalObservable& diag) {
  // Summed in index order, then scaled by the exact dyadic 1/2^n, so the
  // result matches the normalized matrix trace bit for bit.
  Complex sum = 0.0;
  for (Eigen::Index i = 0; i < diag.values.size(); ++i) sum += diag.values[i];
  return sum * (1.0 / static_cast<double>(diag.values.size()));
}

double PointerProjection::normalized_trace() const {
  return static_cast<double>(subset.size()) / static_cast<double>(dim());
}

DiagonalObservable PointerProjection::to_diagonal() const {
  Eigen::VectorXcd values = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim()));
  for (std::uint32_t idx : subset) values[static_cast<Eigen::Index>(idx)] = 1.0;
  return {values};
}

Observable PointerProjection::to_matrix() const {
  check_dense_size(n_sites);
  return spinbath::to_matrix(to_diagonal());
}

PointerProjection projection_with_trace(double s, const SpinChainModel& model) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("s must lie in [0, 1]");
  const std::size_t dim = model.dim();
  // round half up keeps |k/2^n - s| <= 2^{-n-1}
  std::size_t k = static_cast<std::size_t>(std::floor(s * static_cast<double>(dim) + 0.5));
  if (k > dim) k = dim;
  PointerProjection proj;
  proj.n_sites = model.n_sites();
  proj.subset.resize(k);
  std::iota(proj.subset.begin(), proj.subset.end(), 0u);
  return proj;
}

Observable site_observable(int site, int axis, const SpinChainModel& model) {
  check_dense_size(model.n_sites());
  if (site < 1 || site > model.n_sites())
    throw std::out_of_range("site " + std::to_string(site) + " outside 1.." +
                            std::to_string(model.n_sites()));
  if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1, 2, or 3");
  const std::size_t dim = model.dim();
  const std::size_t mask = std::size_t{1} << (model.n_sites() - site);
  Observable m = Observable::Zero(static_cast<Eigen::Index>(dim),
                                  static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const bool down = (col & mask) != 0;
    const Eigen::Index c = static_cast<Eigen::Index>(col);
    switch (axis) {
      case 1:
        m(static_cast<Eigen::Index>(col ^ mask), c) = 1.0;
        break;
      case 2:
        m(static_cast<Eigen::Index>(col ^ mask), c) = down ? Complex(0.0, -1.0)
                                                           : Complex(0.0, 1.0);
        break;
      case 3:
        m(c, c) = down ? -1.0 : 1.0;
        break;
    }
  }
  return m;
}

LimitTheoremResult verify_limit_theorem(const DensityMatrix& lambda, const Observable& x,
                                        const SpinChainModel& model,
                                        const GeneratorCoefficients& coeffs, double tol,
                                        const std::vector<double>& times) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (times.empty()) throw std::invalid_argument("need at least one sample time");
  const Eigen::Index dim = static_cast<Eigen::Index>(model.dim());
  if (lambda.rows() != dim || lambda.cols() != dim || x.rows() != dim || x.cols() != dim)
    throw std::invalid_argument("dimension mismatch between state, observable, and model");

  LimitTheoremResult result;
  result.slowest_rate =
      coeffs.gamma / static_cast<double>(1ULL << (2 * (model.n_sites() - 1)));
  double coeff = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      if (i != j) coeff += std::abs(lambda(j, i)) * std::abs(x(i, j));
  result.envelope_coefficient = coeff;

  const Complex limit_value = lambda.diagonal().cwiseProduct(x.diagonal()).sum();
  const DephasingPropagator prop(model, coeffs);
  Observable evolved(dim, dim);
  bool found = false;
  double best = std::numeric_limits<double>::infinity();
  for (double t : times) {
    if (t < 0.0) throw std::invalid_argument("sample times must be nonnegative");
    prop.evolve(x, t, evolved);
    const Complex value = lambda.transpose().cwiseProduct(evolved).sum();
    const double dist = std::abs(value - limit_value);
    const double env = coeff * std::exp(-result.slowest_rate * t);
    if (dist > env * (1.0 + 1e-9) + 1e-300)
      throw std::logic_error("limit-theorem envelope violated; evolution is inconsistent");
    result.times.push_back(t);
    result.distances.push_back(dist);
    result.envelope.push_back(env);
    if (!found && dist <= tol) {
      result.t_tol = t;
      found = true;
    }
    best = std::min(best, dist);
  }
  if (!found)
    throw HorizonError("distance to the pointer limit stayed above tolerance " +
                           std::to_string(tol) + "; best was " + std::to_string(best),
                       best);
  return result;
}

bool diagonal_invariant_under_evolution(const DiagonalObservable& diag, double t,
                                        const SpinChainModel& model,
                                        const GeneratorCoefficients& coeffs) {
  const std::size_t dim = model.dim();
  if (static_cast<std::size_t>(diag.values.size()) != dim)
    throw std::invalid_argument("diagonal dimension does not match the model");
  const ColumnEvolver ev(model, coeffs, t);
  Eigen::VectorXcd column = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  Eigen::VectorXcd out(static_cast<Eigen::Index>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    const Eigen::Index jj = static_cast<Eigen::Index>(j);
    column[jj] = diag.values[jj];
    ev.apply(column.data(), out.data(), j);
    for (Eigen::Index i = 0; i < column.size(); ++i)
      if (out[i] != column[i]) return false;
    column[jj] = 0.0;
  }
  return true;
}

}  // namespace spinbath
