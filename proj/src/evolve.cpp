#include "spinbath/evolve.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spinbath/kernels/kernels.hpp"

namespace spinbath {

ColumnEvolver::ColumnEvolver(const SpinChainModel& model,
                             const GeneratorCoefficients& coeffs, double t, bool dual)
    : dim_(model.dim()) {
  check_dense_size(model.n_sites());
  if (t < 0.0)
    throw std::invalid_argument("negative time: dephasing is irreversible, t must be >= 0");
  if (coeffs.gamma < 0.0) throw std::invalid_argument("gamma must be nonnegative");

  const double scale = static_cast<double>(1ULL << (2 * (model.n_sites() - 1)));
  const double rate = coeffs.gamma / scale;
  decay_.resize(2 * dim_ - 1);
  for (std::size_t d = 0; d < dim_; ++d) {
    const double gap = static_cast<double>(d);
    const double e = std::exp(-rate * t * gap * gap);
    decay_[dim_ - 1 + d] = e;
    decay_[dim_ - 1 - d] = e;
  }

  const double bt = (dual ? -coeffs.b : coeffs.b) * t;
  with_phases_ = bt != 0.0;
  if (with_phases_) {
    const Eigen::VectorXd q = q_spectrum(model);
    cos_phi_.resize(dim_);
    sin_phi_.resize(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      const double phi = bt * q[static_cast<Eigen::Index>(i)] * q[static_cast<Eigen::Index>(i)];
      cos_phi_[i] = std::cos(phi);
      sin_phi_[i] = std::sin(phi);
    }
  }
}

void ColumnEvolver::apply(const Complex* x, Complex* out, std::size_t j) const {
  const double* decay_base = decay_.data() + (dim_ - 1 - j);
  if (with_phases_) {
    kernels::dephase_column(out, x, decay_base, cos_phi_.data(), sin_phi_.data(),
                            cos_phi_[j], sin_phi_[j], dim_);
    // theta vanishes identically on the diagonal; bypass table rounding.
    out[j] = x[j];
  } else {
    kernels::scale_column(out, x, decay_base, dim_);
  }
}

DephasingPropagator::DephasingPropagator(const SpinChainModel& model,
                                         const GeneratorCoefficients& coeffs, bool dual)
    : model_(model), coeffs_(coeffs), dual_(dual) {
  check_dense_size(model.n_sites());
}

void DephasingPropagator::evolve(const Observable& x, double t, Observable& out) const {
  const Eigen::Index dim = static_cast<Eigen::Index>(model_.dim());
  if (x.rows() != dim || x.cols() != dim)
    throw std::invalid_argument("observable dimension does not match the model");
  const ColumnEvolver ev(model_, coeffs_, t, dual_);
  out.resize(dim, dim);
  const std::size_t n = model_.dim();
  for (std::size_t j = 0; j < n; ++j)
    ev.apply(x.data() + j * n, out.data() + j * n, j);
}

Observable DephasingPropagator::evolve(const Observable& x, double t) const {
  Observable out;
  evolve(x, t, out);
  return out;
}

Observable evolve_closed_form(const Observable& x, double t, const SpinChainModel& model,
                              const GeneratorCoefficients& coeffs) {
  return DephasingPropagator(model, coeffs).evolve(x, t);
}

Observable evolve_ode(const Observable& x, double t, const SpinChainModel& model,
                      const GeneratorCoefficients& coeffs, double step) {
  if (t < 0.0) throw std::invalid_argument("t must be >= 0");
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  const DephasingGenerator gen(model, coeffs);
  if (step * gen.max_rate() > 0.05 * (1.0 + 1e-12))
    throw std::invalid_argument(
        "step too large: require step * max_rate <= 0.05, got step * " +
        std::to_string(gen.max_rate()) + " = " + std::to_string(step * gen.max_rate()));
  const Eigen::Index dim = static_cast<Eigen::Index>(model.dim());
  if (x.rows() != dim || x.cols() != dim)
    throw std::invalid_argument("observable dimension does not match the model");

  Observable y = x;
  if (t == 0.0) return y;
  Observable k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim), tmp(dim, dim);
  const std::size_t n2 = static_cast<std::size_t>(y.size()) * 2;  // doubles
  auto data = [](Observable& m) { return reinterpret_cast<double*>(m.data()); };

  auto rk4_step = [&](double h) {
    gen.apply(y, k1);
    tmp = y;
    kernels::axpy(data(tmp), 0.5 * h, data(k1), n2);
    gen.apply(tmp, k2);
    tmp = y;
    kernels::axpy(data(tmp), 0.5 * h, data(k2), n2);
    gen.apply(tmp, k3);
    tmp = y;
    kernels::axpy(data(tmp), h, data(k3), n2);
    gen.apply(tmp, k4);
    kernels::axpy(data(y), h / 6.0, data(k1), n2);
    kernels::axpy(data(y), h / 3.0, data(k2), n2);
    kernels::axpy(data(y), h / 3.0, data(k3), n2);
    kernels::axpy(data(y), h / 6.0, data(k4), n2);
  };

  const long full_steps = static_cast<long>(std::floor(t / step + 1e-12));
  for (long s = 0; s < full_steps; ++s) rk4_step(step);
  const double rem = t - static_cast<double>(full_steps) * step;
  if (rem > step * 1e-9) rk4_step(rem);
  return y;
}

double decoherence_time(std::size_t i, std::size_t j, double epsilon,
                        const SpinChainModel& model, const GeneratorCoefficients& coeffs) {
  const std::size_t dim = model.dim();
  if (i >= dim || j >= dim) throw std::out_of_range("basis index out of range");
  if (i == j)
    throw std::invalid_argument("diagonal entries never decohere; need i != j");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  const double scale = static_cast<double>(1ULL << (2 * (model.n_sites() - 1)));
  const double gap = static_cast<double>(j) - static_cast<double>(i);
  return std::log(1.0 / epsilon) * scale / (coeffs.gamma * gap * gap);
}

std::vector<Complex> expectation_trajectory(const DensityMatrix& lambda,
                                            const Observable& x,
                                            const std::vector<double>& times,
                                            const SpinChainModel& model,
                                            const GeneratorCoefficients& coeffs) {
  const Eigen::Index dim = static_cast<Eigen::Index>(model.dim());
  if (lambda.rows() != dim || lambda.cols() != dim || x.rows() != dim || x.cols() != dim)
    throw std::invalid_argument("dimension mismatch between state, observable, and model");
  const DephasingPropagator prop(model, coeffs);
  std::vector<Complex> values;
  values.reserve(times.size());
  Observable evolved(dim, dim);
  for (double t : times) {
    prop.evolve(x, t, evolved);
    // tr(Lambda Y) = sum_{ij} Lambda_{ij} Y_{ji}
    values.push_back(lambda.transpose().cwiseProduct(evolved).sum());
  }
  return values;
}

}  // namespace spinbath
