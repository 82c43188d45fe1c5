// Scalar reference kernels. These define the semantics the SIMD variants are
// tested against.

#include "kernels/table.hpp"

namespace spinbath::kernels::detail {
namespace {

void cmul_scalar(std::complex<double>* dst, const std::complex<double>* a,
                 const std::complex<double>* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    dst[i] = {ar * br - ai * bi, ai * br + ar * bi};
  }
}

void axpy_scalar(double* y, double alpha, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void dephase_column_scalar(std::complex<double>* out, const std::complex<double>* x,
                           const double* decay, const double* cos_phi,
                           const double* sin_phi, double cos_j, double sin_j,
                           std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ct = cos_phi[i] * cos_j + sin_phi[i] * sin_j;
    const double st = sin_phi[i] * cos_j - cos_phi[i] * sin_j;
    const double fr = decay[i] * ct;
    const double fi = decay[i] * st;
    const double xr = x[i].real(), xi = x[i].imag();
    out[i] = {xr * fr - xi * fi, xi * fr + xr * fi};
  }
}

void scale_column_scalar(std::complex<double>* out, const std::complex<double>* x,
                         const double* decay, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = {x[i].real() * decay[i], x[i].imag() * decay[i]};
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{cmul_scalar, axpy_scalar, dephase_column_scalar,
                                 scale_column_scalar};
  return table;
}

}  // namespace spinbath::kernels::detail
