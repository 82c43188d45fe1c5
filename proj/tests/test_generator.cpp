#include <doctest.h>

#include <random>

#include "spinbath/generator.hpp"
#include "spinbath/random.hpp"

using namespace spinbath;

TEST_CASE("diagonal observables are annihilated exactly") {
  const SpinChainModel model(3, 1.0, 1.0);
  const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, -0.4);
  Observable diag = Observable::Zero(8, 8);
  for (int i = 0; i < 8; ++i) diag(i, i) = Complex(i + 0.5, -0.25 * i);
  const Observable l = apply_generator(diag, model, coeffs);
  for (Eigen::Index i = 0; i < l.size(); ++i) CHECK(l.data()[i] == Complex(0.0, 0.0));
}

TEST_CASE("single-site generator acts at unit rate on the off-diagonal") {
  const SpinChainModel model(1, 1.0, kPi);  // gamma = 1
  const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, 0.0);
  Observable sigma1 = Observable::Zero(2, 2);
  sigma1(0, 1) = 1.0;
  sigma1(1, 0) = 1.0;
  const Observable l = apply_generator(sigma1, model, coeffs);
  CHECK(l(0, 1).real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(l(0, 1).imag() == 0.0);
  CHECK(l(1, 0).real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(l(0, 0) == Complex(0.0, 0.0));
}

TEST_CASE("entrywise and dense-product routes agree to 1e-12") {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 5; ++n) {
    const SpinChainModel model(n, 0.8, 1.3);
    const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, -0.6);
    for (int rep = 0; rep < 20; ++rep) {
      const Observable x = random_hermitian(model.dim(), rng);
      const Observable fast = apply_generator(x, model, coeffs);
      const Observable dense = apply_generator_dense(x, model, coeffs);
      CHECK((fast - dense).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("generator validates dimensions and coefficients") {
  const SpinChainModel model(2, 1.0, 1.0);
  const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, 0.0);
  const Observable wrong = Observable::Zero(3, 3);
  CHECK_THROWS_AS(apply_generator(wrong, model, coeffs), std::invalid_argument);
  GeneratorCoefficients bad = coeffs;
  bad.gamma = -1.0;
  CHECK_THROWS_AS(DephasingGenerator(model, bad), std::invalid_argument);
}

TEST_CASE("max_rate dominates every entry rate") {
  std::mt19937_64 rng(5);
  const SpinChainModel model(4, 1.2, 0.7);
  const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, -0.9);
  const DephasingGenerator gen(model, coeffs);
  CHECK(gen.max_rate() >= gen.entry_rates().cwiseAbs().maxCoeff() * (1.0 - 1e-12));
}

TEST_CASE("bath-sourced coefficients carry the quadrature b") {
  const SpinChainModel model(2, 1.0, 1.0);
  const SpectralFunctions spec(1.0, CutoffFunction::gaussian(1.0));
  const GeneratorCoefficients coeffs = GeneratorCoefficients::from_bath(model, spec);
  CHECK(coeffs.source == CoefficientSource::kBathNumerical);
  CHECK(coeffs.gamma == model.gamma());
  CHECK(coeffs.b == doctest::Approx(-0.8862269254527580).epsilon(1e-8));
}
