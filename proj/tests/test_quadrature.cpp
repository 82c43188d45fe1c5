#include <doctest.h>

#include <cmath>

#include "spinbath/quadrature.hpp"

using namespace spinbath;

TEST_CASE("polynomials and gaussians integrate to known values") {
  const auto cubic = integrate_real([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(cubic.value.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  QuadratureOptions opts;
  opts.abs_tol = 1e-12;
  const auto gauss = integrate_real([](double x) { return std::exp(-x * x); }, 0.0, 8.0, opts);
  CHECK(gauss.value.real() == doctest::Approx(std::sqrt(kPi) / 2.0).epsilon(1e-12));
  CHECK(gauss.error <= 1e-12);
}

TEST_CASE("oscillatory integrand with a seeded partition") {
  QuadratureOptions opts;
  opts.abs_tol = 1e-11;
  opts.initial_panels = 64;
  const double a = 0.0, b = 10.0 * kPi;
  const auto result = integrate_real([](double x) { return std::sin(x) * x; }, a, b, opts);
  // int x sin x = sin x - x cos x
  const double expected = (std::sin(b) - b * std::cos(b)) - (std::sin(a) - a * std::cos(a));
  CHECK(result.value.real() == doctest::Approx(expected).epsilon(1e-11));
}

TEST_CASE("complex integrands accumulate both components") {
  const auto result =
      integrate([](double x) { return Complex(std::cos(x), std::sin(x)); }, 0.0, 1.0);
  CHECK(result.value.real() == doctest::Approx(std::sin(1.0)).epsilon(1e-13));
  CHECK(result.value.imag() == doctest::Approx(1.0 - std::cos(1.0)).epsilon(1e-13));
}

TEST_CASE("degenerate and reversed intervals") {
  const auto zero = integrate_real([](double x) { return x; }, 2.0, 2.0);
  CHECK(zero.value.real() == 0.0);
  const auto reversed = integrate_real([](double x) { return x; }, 1.0, 0.0);
  CHECK(reversed.value.real() == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("budget exhaustion reports the achieved error") {
  QuadratureOptions opts;
  opts.abs_tol = 1e-14;
  opts.max_panels = 24;
  bool threw = false;
  try {
    integrate_real([](double x) { return std::sin(1.0 / (x + 1e-12)); }, 0.0, 1.0, opts);
  } catch (const QuadratureError& err) {
    threw = true;
    CHECK(err.achieved() > 1e-14);
  }
  CHECK(threw);
}
