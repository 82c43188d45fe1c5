// AVX2 kernel variants. Compiled with -mavx2 -mfma; only reached when the
// dispatcher has verified CPU support at runtime.

#include "kernels/table.hpp"

#include <immintrin.h>

namespace spinbath::kernels::detail {
namespace {

// Interleaved complex multiply of two packed complex<double> values:
// even lanes ar*br - ai*bi, odd lanes ai*br + ar*bi.
inline __m256d cmul_pd(__m256d a, __m256d b) {
  const __m256d bre = _mm256_movedup_pd(b);
  const __m256d bim = _mm256_permute_pd(b, 0xF);
  const __m256d asw = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, bre, _mm256_mul_pd(asw, bim));
}

void cmul_avx2(std::complex<double>* dst, const std::complex<double>* a,
               const std::complex<double>* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  double* pd = reinterpret_cast<double*>(dst);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    _mm256_storeu_pd(pd + 2 * i, cmul_pd(va, vb));
  }
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    dst[i] = {ar * br - ai * bi, ai * br + ar * bi};
  }
}

void axpy_avx2(double* y, double alpha, const double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vy = _mm256_loadu_pd(y + i);
    const __m256d vx = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, vx, vy));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

// Broadcast lanes 0,1 resp. 2,3 of a 4-double vector into complex pair slots.
inline __m256d dup_lo(__m256d v) { return _mm256_permute4x64_pd(v, 0x50); }  // [v0,v0,v1,v1]
inline __m256d dup_hi(__m256d v) { return _mm256_permute4x64_pd(v, 0xFA); }  // [v2,v2,v3,v3]

void dephase_column_avx2(std::complex<double>* out, const std::complex<double>* x,
                         const double* decay, const double* cos_phi,
                         const double* sin_phi, double cos_j, double sin_j,
                         std::size_t n) {
  const __m256d vcj = _mm256_set1_pd(cos_j);
  const __m256d vsj = _mm256_set1_pd(sin_j);
  const double* px = reinterpret_cast<const double*>(x);
  double* po = reinterpret_cast<double*>(out);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d c4 = _mm256_loadu_pd(cos_phi + i);
    const __m256d s4 = _mm256_loadu_pd(sin_phi + i);
    const __m256d d4 = _mm256_loadu_pd(decay + i);
    const __m256d ct = _mm256_fmadd_pd(c4, vcj, _mm256_mul_pd(s4, vsj));
    const __m256d st = _mm256_fmsub_pd(s4, vcj, _mm256_mul_pd(c4, vsj));
    const __m256d fa = _mm256_mul_pd(d4, ct);
    const __m256d fb = _mm256_mul_pd(d4, st);

    const __m256d xlo = _mm256_loadu_pd(px + 2 * i);
    const __m256d xhi = _mm256_loadu_pd(px + 2 * i + 4);
    const __m256d rlo = _mm256_fmaddsub_pd(
        xlo, dup_lo(fa), _mm256_mul_pd(_mm256_permute_pd(xlo, 0x5), dup_lo(fb)));
    const __m256d rhi = _mm256_fmaddsub_pd(
        xhi, dup_hi(fa), _mm256_mul_pd(_mm256_permute_pd(xhi, 0x5), dup_hi(fb)));
    _mm256_storeu_pd(po + 2 * i, rlo);
    _mm256_storeu_pd(po + 2 * i + 4, rhi);
  }
  for (; i < n; ++i) {
    const double ct = cos_phi[i] * cos_j + sin_phi[i] * sin_j;
    const double st = sin_phi[i] * cos_j - cos_phi[i] * sin_j;
    const double fr = decay[i] * ct;
    const double fi = decay[i] * st;
    const double xr = x[i].real(), xi = x[i].imag();
    out[i] = {xr * fr - xi * fi, xi * fr + xr * fi};
  }
}

void scale_column_avx2(std::complex<double>* out, const std::complex<double>* x,
                       const double* decay, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* po = reinterpret_cast<double*>(out);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d4 = _mm256_loadu_pd(decay + i);
    const __m256d xlo = _mm256_loadu_pd(px + 2 * i);
    const __m256d xhi = _mm256_loadu_pd(px + 2 * i + 4);
    _mm256_storeu_pd(po + 2 * i, _mm256_mul_pd(xlo, dup_lo(d4)));
    _mm256_storeu_pd(po + 2 * i + 4, _mm256_mul_pd(xhi, dup_hi(d4)));
  }
  for (; i < n; ++i)
    out[i] = {x[i].real() * decay[i], x[i].imag() * decay[i]};
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{cmul_avx2, axpy_avx2, dephase_column_avx2,
                                 scale_column_avx2};
  return table;
}

}  // namespace spinbath::kernels::detail
