// kernels.hpp — data-parallel inner loops behind the dense dynamics.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant selected at runtime. The two are equivalence-tested; the active
// backend can be forced through set_backend() or the SPINBATH_KERNELS
// environment variable (values: auto, scalar, avx2).

#pragma once

#include <complex>
#include <cstddef>

namespace spinbath::kernels {

enum class Backend { kScalar, kAvx2 };

bool avx2_supported();
Backend active_backend();
const char* backend_name(Backend backend);

// Throws std::invalid_argument when the backend is not usable on this CPU.
void set_backend(Backend backend);
// Back to automatic selection (environment variable still honored).
void reset_backend();

// dst[i] = a[i] * b[i]
void cmul(std::complex<double>* dst, const std::complex<double>* a,
          const std::complex<double>* b, std::size_t n);

// y[i] += alpha * x[i] on raw doubles; complex buffers are passed as 2n doubles.
void axpy(double* y, double alpha, const double* x, std::size_t n);

// One column of the dephasing map. For row index i,
//   theta_i = phi_i - phi_j   (angle difference, from cos/sin tables)
//   out[i]  = x[i] * decay[i] * (cos theta_i + i sin theta_i)
// where decay walks the per-gap damping table (the caller offsets the base
// pointer so decay[i] is the entry for gap i - j).
void dephase_column(std::complex<double>* out, const std::complex<double>* x,
                    const double* decay, const double* cos_phi,
                    const double* sin_phi, double cos_j, double sin_j,
                    std::size_t n);

// Phase-free variant: out[i] = x[i] * decay[i].
void scale_column(std::complex<double>* out, const std::complex<double>* x,
                  const double* decay, std::size_t n);

}  // namespace spinbath::kernels
