#include <doctest.h>

#include <cmath>
#include <random>

#include "spinbath/evolve.hpp"
#include "spinbath/random.hpp"

using namespace spinbath;

namespace {

bool exactly_equal(const Observable& a, const Observable& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a.data()[i] != b.data()[i]) return false;
  return true;
}

double max_abs(const Observable& m) { return m.cwiseAbs().maxCoeff(); }

// per-entry closed form evaluated the straightforward way, as an independent
// check on the column-kernel wiring
Observable naive_evolve(const Observable& x, double t, const SpinChainModel& model,
                        const GeneratorCoefficients& coeffs) {
  const Eigen::VectorXd q = q_spectrum(model);
  const double scale = static_cast<double>(1ULL << (2 * (model.n_sites() - 1)));
  Observable out(x.rows(), x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      const double gap = static_cast<double>(j - i);
      const double damp = std::exp(-coeffs.gamma * t * gap * gap / scale);
      const double theta = coeffs.b * t * (q[i] * q[i] - q[j] * q[j]);
      out(i, j) = x(i, j) * damp * Complex(std::cos(theta), std::sin(theta));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("closed form matches the per-entry formula") {
  std::mt19937_64 rng(41);
  for (int n : {1, 2, 4}) {
    const SpinChainModel model(n, 1.1, 0.9);
    const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, -0.8);
    const Observable x = random_hermitian(model.dim(), rng);
    for (double t : {0.0, 0.3, 2.0}) {
      const Observable fast = evolve_closed_form(x, t, model, coeffs);
      CHECK((fast - naive_evolve(x, t, model, coeffs)).cwiseAbs().maxCoeff() <= 1e-13);
    }
  }
}

TEST_CASE("t = 0 and diagonal inputs are exact fixed points") {
  std::mt19937_64 rng(43);
  const SpinChainModel model(4, 1.0, 1.0);
  const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, -0.5);
  const Observable x = random_hermitian(model.dim(), rng);
  CHECK(exactly_equal(evolve_closed_form(x, 0.0, model, coeffs), x));

  Observable diag = Observable::Zero(16, 16);
  diag.diagonal() = x.diagonal();
  for (double t : {0.01, 1.0, 250.0})
    CHECK(exactly_equal(evolve_closed_form(diag, t, model, coeffs), diag));

  const Observable identity = Observable::Identity(16, 16);
  CHECK(exactly_equal(evolve_closed_form(identity, 3.0, model, coeffs), identity));
}

TEST_CASE("single-site coherence decays by e^-1 at t = 1") {
  const SpinChainModel model(1, 1.0, kPi);  // gamma = 1
  const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, 0.0);
  Observable sigma1 = Observable::Zero(2, 2);
  sigma1(0, 1) = 1.0;
  sigma1(1, 0) = 1.0;
  const Observable evolved = evolve_closed_form(sigma1, 1.0, model, coeffs);
  CHECK(evolved(0, 1).real() ==
        doctest::Approx(0.36787944117144233).epsilon(1e-15));
  CHECK(evolved(0, 0) == Complex(0.0, 0.0));
}

TEST_CASE("semigroup law holds to machine precision") {
  std::mt19937_64 rng(47);
  const SpinChainModel model(5, 1.0, 0.8);
  const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, -0.6);
  const Observable x = random_hermitian(model.dim(), rng);
  const Observable split =
      evolve_closed_form(evolve_closed_form(x, 1.4, model, coeffs), 0.7, model, coeffs);
  const Observable direct = evolve_closed_form(x, 2.1, model, coeffs);
  CHECK(max_abs(split - direct) <= 1e-13 * std::max(1.0, max_abs(x)));
}

TEST_CASE("dissipative and Hamiltonian factors commute to machine precision") {
  std::mt19937_64 rng(53);
  const SpinChainModel model(4, 1.0, 1.0);
  const GeneratorCoefficients damp = GeneratorCoefficients::closed_form(model, 0.0);
  GeneratorCoefficients phase = damp;
  phase.gamma = 0.0;
  phase.b = -0.8862269254527580;
  const Observable x = random_hermitian(model.dim(), rng);
  const Observable dp =
      evolve_closed_form(evolve_closed_form(x, 1.3, model, damp), 1.3, model, phase);
  const Observable pd =
      evolve_closed_form(evolve_closed_form(x, 1.3, model, phase), 1.3, model, damp);
  CHECK(max_abs(dp - pd) <= 1e-14 * std::max(1.0, max_abs(x)));
  // and the composition is the full propagator
  GeneratorCoefficients both = damp;
  both.b = phase.b;
  CHECK(max_abs(dp - evolve_closed_form(x, 1.3, model, both)) <=
        1e-13 * std::max(1.0, max_abs(x)));
}

TEST_CASE("coherence magnitudes never grow along the flow") {
  std::mt19937_64 rng(59);
  const SpinChainModel model(4, 1.0, 1.0);
  const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, -0.7);
  const Observable x = random_hermitian(model.dim(), rng);
  Observable prev = x;
  for (double t : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    const Observable now = evolve_closed_form(x, t, model, coeffs);
    for (Eigen::Index idx = 0; idx < x.size(); ++idx)
      CHECK(std::abs(now.data()[idx]) <= std::abs(prev.data()[idx]) * (1.0 + 1e-15));
    prev = now;
  }
}

TEST_CASE("RK4 oracle reproduces the closed form") {
  std::mt19937_64 rng(61);
  const SpinChainModel model(3, 1.0, kPi);  // gamma = 1
  const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, -0.5);
  for (int rep = 0; rep < 3; ++rep) {
    const Observable x = random_hermitian(model.dim(), rng);
    for (double t : {0.1, 1.0}) {
      const Observable ode = evolve_ode(x, t, model, coeffs, 1e-3);
      const Observable exact = evolve_closed_form(x, t, model, coeffs);
      CHECK(max_abs(ode - exact) <= 1e-6);
    }
  }
}

TEST_CASE("RK4 error scales as the fourth power of the step") {
  std::mt19937_64 rng(67);
  const SpinChainModel model(3, 1.0, kPi);
  const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, 0.0);
  const Observable x = random_hermitian(model.dim(), rng);
  const Observable exact = evolve_closed_form(x, 1.0, model, coeffs);
  const double e1 = max_abs(exact - evolve_ode(x, 1.0, model, coeffs, 1.0 / 128.0));
  const double e2 = max_abs(exact - evolve_ode(x, 1.0, model, coeffs, 1.0 / 256.0));
  const double ratio = e1 / e2;
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("ODE preconditions are enforced") {
  const SpinChainModel model(5, 1.0, 0.2);  // stiff: gamma = 5 pi
  const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, 0.0);
  const Observable x = Observable::Zero(32, 32);
  CHECK_THROWS_AS(evolve_ode(x, 1.0, model, coeffs, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(evolve_ode(x, -1.0, model, coeffs, 1e-4), std::invalid_argument);
  CHECK_THROWS_AS(evolve_closed_form(x, -0.1, model, coeffs), std::invalid_argument);
  // diagonal input stays put under the integrator as well
  const SpinChainModel small(2, 1.0, 1.0);
  const GeneratorCoefficients cs = GeneratorCoefficients::closed_form(small, -0.3);
  Observable diag = Observable::Zero(4, 4);
  diag.diagonal() << Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 0);
  CHECK(exactly_equal(evolve_ode(diag, 0.5, small, cs, 1e-3), diag));
}

TEST_CASE("decoherence times invert the dephasing factors") {
  const SpinChainModel model(1, 1.0, kPi);  // gamma = 1
  const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, 0.0);
  const double inv_e = 0.36787944117144233;
  CHECK(decoherence_time(0, 1, inv_e, model, coeffs) ==
        doctest::Approx(1.0).epsilon(1e-14));

  const SpinChainModel chain(4, 1.0, kPi);
  const GeneratorCoefficients cc = GeneratorCoefficients::closed_form(chain, 0.0);
  const double t1 = decoherence_time(0, 2, 0.01, chain, cc);
  const double t2 = decoherence_time(0, 4, 0.01, chain, cc);
  CHECK(t1 == doctest::Approx(4.0 * t2).epsilon(1e-13));

  // doubling the temperature halves every crossing time
  const SpinChainModel warm(4, 1.0, kPi / 2.0);
  const GeneratorCoefficients cw = GeneratorCoefficients::closed_form(warm, 0.0);
  CHECK(decoherence_time(0, 2, 0.01, warm, cw) ==
        doctest::Approx(0.5 * t1).epsilon(1e-13));

  CHECK_THROWS_AS(decoherence_time(2, 2, 0.5, chain, cc), std::invalid_argument);
  CHECK_THROWS_AS(decoherence_time(0, 99, 0.5, chain, cc), std::out_of_range);
  CHECK_THROWS_AS(decoherence_time(0, 1, 1.5, chain, cc), std::invalid_argument);
  GeneratorCoefficients frozen = cc;
  frozen.gamma = 0.0;
  CHECK(std::isinf(decoherence_time(0, 1, 0.5, chain, frozen)));
}

TEST_CASE("expectation trajectories: unitality, invariance, reality") {
  std::mt19937_64 rng(71);
  const SpinChainModel model(4, 1.0, 1.0);
  const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, -0.4);
  const DensityMatrix lambda = random_density(model.dim(), rng);
  const std::vector<double> times{0.0, 0.5, 1.0, 5.0, 20.0};

  const auto unital = expectation_trajectory(
      lambda, Observable::Identity(16, 16), times, model, coeffs);
  for (const Complex& v : unital) CHECK(std::abs(v - 1.0) <= 1e-12);

  Observable diag = Observable::Zero(16, 16);
  diag.diagonal() = random_hermitian(model.dim(), rng).diagonal();
  const auto constant = expectation_trajectory(lambda, diag, times, model, coeffs);
  for (const Complex& v : constant) CHECK(v == constant.front());

  const Observable x = random_hermitian(model.dim(), rng);
  const auto traj = expectation_trajectory(lambda, x, times, model, coeffs);
  for (const Complex& v : traj) CHECK(std::abs(v.imag()) <= 1e-10);
}

TEST_CASE("seeded generators produce well-formed states and observables") {
  std::mt19937_64 rng_a(314), rng_b(314);
  const DensityMatrix rho = random_density(8, rng_a);
  CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(std::abs(rho.trace() - 1.0) <= 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eigs(rho);
  CHECK(eigs.eigenvalues().minCoeff() >= -1e-12);

  const Observable x = random_hermitian(8, rng_a);
  CHECK((x - x.adjoint()).cwiseAbs().maxCoeff() == 0.0);

  // identical seeds replay the identical draw sequence
  const DensityMatrix rho2 = random_density(8, rng_b);
  const Observable x2 = random_hermitian(8, rng_b);
  CHECK(exactly_equal(rho, rho2));
  CHECK(exactly_equal(x, x2));
}

TEST_CASE("dual evolution preserves states (positivity, trace, hermiticity)") {
  std::mt19937_64 rng(73);
  const SpinChainModel model(3, 1.0, 1.0);
  const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, -0.9);
  const DephasingPropagator dual(model, coeffs, /*dual=*/true);
  const DensityMatrix rho = random_density(model.dim(), rng);
  for (double t : {0.3, 2.0, 10.0}) {
    const DensityMatrix evolved = dual.evolve(rho, t);
    CHECK((evolved - evolved.adjoint()).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK(std::abs(evolved.trace() - rho.trace()) <= 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eigs(evolved);
    CHECK(eigs.eigenvalues().minCoeff() >= -1e-10);
  }
}

TEST_CASE("dual and forward propagators are trace-dual") {
  std::mt19937_64 rng(79);
  const SpinChainModel model(3, 1.0, 1.0);
  const GeneratorCoefficients coeffs = GeneratorCoefficients::closed_form(model, -0.5);
  const DephasingPropagator forward(model, coeffs);
  const DephasingPropagator dual(model, coeffs, true);
  const DensityMatrix rho = random_density(model.dim(), rng);
  const Observable x = random_hermitian(model.dim(), rng);
  const double t = 1.7;
  const Complex lhs = (rho.transpose().cwiseProduct(forward.evolve(x, t))).sum();
  const Complex rhs = (dual.evolve(rho, t).transpose().cwiseProduct(x)).sum();
  CHECK(std::abs(lhs - rhs) <= 1e-12);
}
