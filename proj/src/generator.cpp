#include "spinbath/generator.hpp"

#include <stdexcept>

#include "spinbath/bath.hpp"
#include "spinbath/kernels/kernels.hpp"

namespace spinbath {

const char* source_name(CoefficientSource source) {
  switch (source) {
    case CoefficientSource::kClosedForm: return "closed_form";
    case CoefficientSource::kBathNumerical: return "bath_numerical";
  }
  return "unknown";
}

GeneratorCoefficients GeneratorCoefficients::closed_form(const SpinChainModel& model,
                                                         double b) {
  return {model.gamma(), b, CoefficientSource::kClosedForm};
}

GeneratorCoefficients GeneratorCoefficients::from_bath(const SpinChainModel& model,
                                                       const SpectralFunctions& spec) {
  const BathCoefficients bc = coefficient_b(spec, BMethod::kQuadrature);
  return {model.gamma(), bc.b, CoefficientSource::kBathNumerical};
}

DephasingGenerator::DephasingGenerator(const SpinChainModel& model,
                                       const GeneratorCoefficients& coeffs) {
  check_dense_size(model.n_sites());
  if (coeffs.gamma < 0.0) throw std::invalid_argument("gamma must be nonnegative");
  const Eigen::Index dim = static_cast<Eigen::Index>(model.dim());
  const Eigen::VectorXd q = q_spectrum(model);
  const Eigen::VectorXd q2 = q.array().square();
  // 4^{n-1} is an exact power of two, so the scaled rate divides exactly.
  const double scale = static_cast<double>(1ULL << (2 * (model.n_sites() - 1)));
  const double rate = coeffs.gamma / scale;

  rates_.resize(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double gap = static_cast<double>(j - i);
      rates_(i, j) = Complex(-rate * gap * gap, coeffs.b * (q2[i] - q2[j]));
    }
  }
  const double span = q2.maxCoeff() - q2.minCoeff();
  const double top = static_cast<double>(dim - 1);
  max_rate_ = rate * top * top + std::abs(coeffs.b) * span;
}

void DephasingGenerator::apply(const Observable& x, Observable& out) const {
  if (x.rows() != rates_.rows() || x.cols() != rates_.cols())
    throw std::invalid_argument("observable dimension does not match the generator");
  out.resize(x.rows(), x.cols());
  kernels::cmul(out.data(), rates_.data(), x.data(),
                static_cast<std::size_t>(x.size()));
}

Observable DephasingGenerator::apply(const Observable& x) const {
  Observable out;
  apply(x, out);
  return out;
}

Observable apply_generator(const Observable& x, const SpinChainModel& model,
                           const GeneratorCoefficients& coeffs) {
  return DephasingGenerator(model, coeffs).apply(x);
}

Observable apply_generator_dense(const Observable& x, const SpinChainModel& model,
                                 const GeneratorCoefficients& coeffs) {
  check_dense_size(model.n_sites());
  const Eigen::Index dim = static_cast<Eigen::Index>(model.dim());
  if (x.rows() != dim || x.cols() != dim)
    throw std::invalid_argument("observable dimension does not match the model");
  const Eigen::VectorXd q = q_spectrum(model);
  const Eigen::VectorXd q2 = q.array().square();
  const Observable qxq = q.asDiagonal() * x * q.asDiagonal();
  const Observable anti = q2.asDiagonal() * x + x * q2.asDiagonal();
  const Observable comm = q2.asDiagonal() * x - x * q2.asDiagonal();
  return Complex(0.0, coeffs.b) * comm + 2.0 * coeffs.gamma * qxq - coeffs.gamma * anti;
}

}  // namespace spinbath
