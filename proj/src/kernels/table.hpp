// table.hpp — internal kernel function-pointer table used by the dispatcher.

#pragma once

#include <complex>
#include <cstddef>

namespace spinbath::kernels::detail {

struct KernelTable {
  void (*cmul)(std::complex<double>*, const std::complex<double>*,
               const std::complex<double>*, std::size_t);
  void (*axpy)(double*, double, const double*, std::size_t);
  void (*dephase_column)(std::complex<double>*, const std::complex<double>*,
                         const double*, const double*, const double*, double,
                         double, std::size_t);
  void (*scale_column)(std::complex<double>*, const std::complex<double>*,
                       const double*, std::size_t);
};

const KernelTable& scalar_table();

#if defined(SPINBATH_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace spinbath::kernels::detail
