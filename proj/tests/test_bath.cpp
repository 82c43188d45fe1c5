#include <doctest.h>

#include <cmath>

#include "spinbath/bath.hpp"
#include "spinbath/quadrature.hpp"

using namespace spinbath;

namespace {

std::vector<CutoffFunction> families() {
  return {CutoffFunction::gaussian(1.0), CutoffFunction::exponential(1.0),
          CutoffFunction::algebraic(1.0, 3.0)};
}

}  // namespace

TEST_CASE("spectral density is ohmic with slope 2") {
  const CutoffFunction gauss = CutoffFunction::gaussian(1.0);
  CHECK(spectral_density(0.0, gauss) == 0.0);
  CHECK(spectral_density(1e-4, gauss) / 1e-4 == doctest::Approx(2.0).epsilon(1e-6));
  CHECK_THROWS_AS(spectral_density(-1.0, gauss), std::invalid_argument);

  // algebraic p = 3 decays faster than omega^-3
  const CutoffFunction alg = CutoffFunction::algebraic(1.0, 3.0);
  double prev = std::numeric_limits<double>::infinity();
  for (double omega : {10.0, 30.0, 100.0, 300.0}) {
    const double weighted = spectral_density(omega, alg) * omega * omega * omega;
    CHECK(weighted < prev);
    prev = weighted;
  }
  CHECK(prev < 1e-4);
}

TEST_CASE("cutoff families are even, normalized, and validated") {
  for (const CutoffFunction& chi : families()) {
    CHECK(chi(0.0) == 1.0);
    CHECK(chi.chi2(0.0) == 1.0);
    for (double k : {0.3, 1.7, 9.0}) {
      CHECK(chi(k) == chi(-k));
      CHECK(chi.chi2(k) == doctest::Approx(chi(k) * chi(k)).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(CutoffFunction::gaussian(0.0), std::invalid_argument);
  CHECK_THROWS_AS(CutoffFunction::algebraic(1.0, 2.0), std::invalid_argument);
}

TEST_CASE("tail bounds really bound the tails") {
  for (const CutoffFunction& chi : families()) {
    const double K = chi.mass_cutoff(1e-12);
    // compare the analytic bound against quadrature over [K, 4K]; the values
    // are themselves ~1e-12, so drive the rule by relative tolerance
    QuadratureOptions opts;
    opts.abs_tol = 1e-22;
    opts.rel_tol = 1e-8;
    const auto tail =
        integrate_real([&chi](double k) { return k * chi.chi2(k); }, K, 4.0 * K, opts);
    CHECK(tail.value.real() <= chi.k_chi2_tail(K) * (1.0 + 1e-6));
    CHECK(chi.k_chi2_tail(K) <= 1e-12 * (1.0 + 1e-6));
  }
}

TEST_CASE("spectral functions: parity, limits, series continuity") {
  for (const CutoffFunction& chi : families()) {
    for (double beta : {0.5, 1.0, 2.0}) {
      const SpectralFunctions spec(beta, chi);
      CHECK(spec.f1(0.0) == 1.0 / beta);
      CHECK(spec.f2(0.0) == 0.0);
      CHECK(spec.f3(0.0) == 0.0);
      for (double k : {0.2, 1.0, 3.0}) {
        CHECK(spec.f1(k) == spec.f1(-k));
        CHECK(spec.f2(k) == spec.f2(-k));
        CHECK(spec.f3(k) == -spec.f3(-k));
        CHECK(spec.f1(k) > 0.0);
      }
      // below the series switch beta|k| = 1e-3 the Bernoulli expansion must
      // match the raw expression evaluated at the same point
      const double ks = 0.999e-3 / beta;
      const double direct = ks * chi.chi2(ks) / std::expm1(beta * ks);
      CHECK(spec.f1(ks) == doctest::Approx(direct).epsilon(1e-12));
      // even_part equals f1 + f2/2
      CHECK(spec.even_part(0.7) ==
            doctest::Approx(spec.f1(0.7) + 0.5 * spec.f2(0.7)).epsilon(1e-14));
    }
  }
}

TEST_CASE("correlation function at t = 0 matches the separate transforms") {
  const SpectralFunctions spec(1.0, CutoffFunction::gaussian(1.0));
  const double K = spec.cutoff.mass_cutoff(1e-12);
  QuadratureOptions opts;
  opts.abs_tol = 1e-11;
  const double int_f1 =
      2.0 * integrate_real([&spec](double k) { return spec.f1(k); }, 0.0, K, opts)
                .value.real();
  const double int_f2 =
      2.0 * integrate_real([&spec](double k) { return spec.f2(k); }, 0.0, K, opts)
                .value.real();
  const Complex c0 = correlation_function(0.0, spec);
  CHECK(c0.imag() == 0.0);  // f3 never enters at t = 0
  CHECK(c0.real() == doctest::Approx(int_f1 + 0.5 * int_f2).epsilon(1e-9));
}

TEST_CASE("correlation function symmetry and short-time sign") {
  const SpectralFunctions spec(1.0, CutoffFunction::gaussian(1.0));
  for (double t : {0.1, 1.0, 10.0}) {
    const Complex plus = correlation_function(t, spec);
    const Complex minus = correlation_function(-t, spec);
    CHECK(std::abs(minus - std::conj(plus)) <= 1e-12);
  }
  for (double t : {0.05, 0.1, 0.2})
    CHECK(correlation_function(t, spec).imag() < 0.0);
}

TEST_CASE("coefficient a: closed form and numerical limit") {
  for (const CutoffFunction& chi : families()) {
    for (double beta : {0.5, 1.0, 2.0}) {
      const SpectralFunctions spec(beta, chi);
      const BathCoefficients closed = coefficient_a(spec, AMethod::kClosedForm);
      CHECK(closed.a == 2.0 * kPi / beta);
      CHECK(closed.a_error == 0.0);
      const BathCoefficients numerical = coefficient_a(spec, AMethod::kNumerical);
      CHECK(std::abs(numerical.a - closed.a) / closed.a <= 1e-4);
    }
  }
  const SpectralFunctions two(2.0, CutoffFunction::gaussian(1.0));
  CHECK(coefficient_a(two, AMethod::kClosedForm).a == doctest::Approx(kPi).epsilon(1e-15));
}

TEST_CASE("coefficient b against closed-form integrals") {
  const SpectralFunctions gauss(1.0, CutoffFunction::gaussian(1.0));
  const BathCoefficients bg = coefficient_b(gauss, BMethod::kQuadrature);
  CHECK(bg.b == doctest::Approx(-std::sqrt(kPi) / 2.0).epsilon(1e-9));
  CHECK(bg.b < 0.0);

  const SpectralFunctions alg(1.0, CutoffFunction::algebraic(1.0, 3.0));
  CHECK(coefficient_b(alg, BMethod::kQuadrature).b ==
        doctest::Approx(-3.0 * kPi / 16.0).epsilon(1e-9));

  const SpectralFunctions sech(1.0, CutoffFunction::exponential(1.0));
  CHECK(coefficient_b(sech, BMethod::kQuadrature).b == doctest::Approx(-1.0).epsilon(1e-9));

  // doubling k0 doubles |b|
  const SpectralFunctions wide(1.0, CutoffFunction::gaussian(2.0));
  CHECK(coefficient_b(wide, BMethod::kQuadrature).b ==
        doctest::Approx(2.0 * bg.b).epsilon(1e-9));
}

TEST_CASE("correlation-integral route reproduces b within combined errors") {
  const SpectralFunctions spec(1.0, CutoffFunction::gaussian(1.0));
  const BathCoefficients direct = coefficient_b(spec, BMethod::kQuadrature);
  const BathCoefficients via_c = coefficient_b(spec, BMethod::kCorrelationIntegral, 1e-4);
  CHECK(std::abs(via_c.b - direct.b) <=
        std::max(1e-6, via_c.b_error + direct.b_error));
  CHECK(std::abs(via_c.b - direct.b) <= 1e-3);
}

TEST_CASE("time integral of C reaches a/2 + i b") {
  const SpectralFunctions spec(1.0, CutoffFunction::gaussian(1.0));
  const CorrelationIntegral ci = integrate_correlation(spec, 200.0, 1e-3);
  CHECK(ci.value.real() == doctest::Approx(kPi).epsilon(1e-3));
  CHECK(ci.value.imag() == doctest::Approx(-std::sqrt(kPi) / 2.0).epsilon(1e-3));

  // halving the temperature halves the real part
  const SpectralFunctions cold(2.0, CutoffFunction::gaussian(1.0));
  const CorrelationIntegral ci2 = integrate_correlation(cold, 200.0, 1e-3);
  CHECK(ci2.value.real() == doctest::Approx(0.5 * ci.value.real()).epsilon(2e-3));
}

TEST_CASE("doubling the horizon moves the value less than the tail bound") {
  const SpectralFunctions spec(1.0, CutoffFunction::gaussian(1.0));
  const CorrelationIntegral base = integrate_correlation(spec, 16.0, 1e-4);
  const CorrelationIntegral doubled = integrate_correlation(spec, 32.0, 1e-4);
  CHECK(std::abs(doubled.value - base.value) <=
        base.tail_bound + base.quad_error + doubled.quad_error);
}

TEST_CASE("undersized horizons are rejected with advice") {
  const SpectralFunctions spec(1.0, CutoffFunction::gaussian(1.0));
  CHECK_THROWS_AS(integrate_correlation(spec, 0.5, 1e-6), TailBoundError);
  CHECK_THROWS_AS(integrate_correlation(spec, 0.0, 1e-6), std::invalid_argument);
}

TEST_CASE("positivity of a and negativity of b across families") {
  for (const CutoffFunction& chi : families()) {
    for (double beta : {0.5, 1.0, 2.0}) {
      const SpectralFunctions spec(beta, chi);
      CHECK(coefficient_a(spec, AMethod::kNumerical).a > 0.0);
      CHECK(coefficient_b(spec, BMethod::kQuadrature).b < 0.0);
    }
  }
}
