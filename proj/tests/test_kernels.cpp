#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "spinbath/kernels/kernels.hpp"

using namespace spinbath;
using kernels::Backend;

namespace {

struct ColumnInputs {
  std::vector<std::complex<double>> x;
  std::vector<double> decay, cos_phi, sin_phi;
  double cos_j = 1.0, sin_j = 0.0;
};

ColumnInputs make_inputs(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 2.0 * 3.141592653589793);
  ColumnInputs in;
  in.x.resize(n);
  in.decay.resize(n);
  in.cos_phi.resize(n);
  in.sin_phi.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    in.x[i] = {normal(rng), normal(rng)};
    in.decay[i] = std::exp(-std::abs(normal(rng)));
    const double phi = uniform(rng);
    in.cos_phi[i] = std::cos(phi);
    in.sin_phi[i] = std::sin(phi);
  }
  const double phj = uniform(rng);
  in.cos_j = std::cos(phj);
  in.sin_j = std::sin(phj);
  return in;
}

double max_diff(const std::vector<std::complex<double>>& a,
                const std::vector<std::complex<double>>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("scalar cmul matches std::complex multiplication") {
  kernels::set_backend(Backend::kScalar);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::complex<double>> a(257), b(257), out(257);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = {normal(rng), normal(rng)};
    b[i] = {normal(rng), normal(rng)};
  }
  kernels::cmul(out.data(), a.data(), b.data(), out.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    CHECK(std::abs(out[i] - a[i] * b[i]) <= 1e-15);
  kernels::reset_backend();
}

TEST_CASE("dephase_column applies decay and rotation per row") {
  std::mt19937_64 rng(11);
  const ColumnInputs in = make_inputs(65, rng);
  std::vector<std::complex<double>> out(in.x.size());
  kernels::set_backend(Backend::kScalar);
  kernels::dephase_column(out.data(), in.x.data(), in.decay.data(), in.cos_phi.data(),
                          in.sin_phi.data(), in.cos_j, in.sin_j, in.x.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double theta_c = in.cos_phi[i] * in.cos_j + in.sin_phi[i] * in.sin_j;
    const double theta_s = in.sin_phi[i] * in.cos_j - in.cos_phi[i] * in.sin_j;
    const std::complex<double> expected =
        in.x[i] * in.decay[i] * std::complex<double>(theta_c, theta_s);
    CHECK(std::abs(out[i] - expected) <= 1e-14);
  }
  kernels::reset_backend();
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!kernels::avx2_supported()) return;
  std::mt19937_64 rng(23);
  std::normal_distribution<double> normal(0.0, 1.0);

  for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{2}, std::size_t{3},
                        std::size_t{4}, std::size_t{5}, std::size_t{7}, std::size_t{8},
                        std::size_t{33}, std::size_t{1000}, std::size_t{1024}}) {
    const ColumnInputs in = make_inputs(n, rng);
    std::vector<std::complex<double>> a(n), b(n);
    std::vector<double> y0(2 * n + 1), x0(2 * n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = {normal(rng), normal(rng)};
      b[i] = {normal(rng), normal(rng)};
    }
    for (auto& v : y0) v = normal(rng);
    for (auto& v : x0) v = normal(rng);

    std::vector<std::complex<double>> cmul_s(n), cmul_v(n), deph_s(n), deph_v(n),
        scale_s(n), scale_v(n);
    std::vector<double> axpy_s = y0, axpy_v = y0;

    kernels::set_backend(Backend::kScalar);
    kernels::cmul(cmul_s.data(), a.data(), b.data(), n);
    kernels::axpy(axpy_s.data(), 0.37, x0.data(), axpy_s.size());
    kernels::dephase_column(deph_s.data(), in.x.data(), in.decay.data(),
                            in.cos_phi.data(), in.sin_phi.data(), in.cos_j, in.sin_j, n);
    kernels::scale_column(scale_s.data(), in.x.data(), in.decay.data(), n);

    kernels::set_backend(Backend::kAvx2);
    kernels::cmul(cmul_v.data(), a.data(), b.data(), n);
    kernels::axpy(axpy_v.data(), 0.37, x0.data(), axpy_v.size());
    kernels::dephase_column(deph_v.data(), in.x.data(), in.decay.data(),
                            in.cos_phi.data(), in.sin_phi.data(), in.cos_j, in.sin_j, n);
    kernels::scale_column(scale_v.data(), in.x.data(), in.decay.data(), n);
    kernels::reset_backend();

    CHECK(max_diff(cmul_s, cmul_v) <= 1e-13);
    CHECK(max_diff(deph_s, deph_v) <= 1e-13);
    CHECK(max_diff(scale_s, scale_v) <= 1e-13);
    double axpy_diff = 0.0;
    for (std::size_t i = 0; i < axpy_s.size(); ++i)
      axpy_diff = std::max(axpy_diff, std::abs(axpy_s[i] - axpy_v[i]));
    CHECK(axpy_diff <= 1e-13);
  }
}

TEST_CASE("backend selection is explicit and reversible") {
  const Backend initial = kernels::active_backend();
  kernels::set_backend(Backend::kScalar);
  CHECK(kernels::active_backend() == Backend::kScalar);
  CHECK(kernels::backend_name(Backend::kScalar) == std::string("scalar"));
  if (!kernels::avx2_supported())
    CHECK_THROWS_AS(kernels::set_backend(Backend::kAvx2), std::invalid_argument);
  kernels::reset_backend();
  CHECK(kernels::active_backend() == initial);
}
