// Runtime kernel dispatch. Picks AVX2 when the CPU supports it, otherwise the
// scalar reference; SPINBATH_KERNELS or set_backend() override the choice.

#include "spinbath/kernels/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels/table.hpp"

namespace spinbath::kernels {
namespace {

using detail::KernelTable;

const KernelTable* table_for(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return &detail::scalar_table();
    case Backend::kAvx2:
#if defined(SPINBATH_HAVE_AVX2)
      return &detail::avx2_table();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

Backend auto_backend() {
  if (avx2_supported()) return Backend::kAvx2;
  return Backend::kScalar;
}

Backend initial_backend() {
  if (const char* env = std::getenv("SPINBATH_KERNELS")) {
    const std::string value(env);
    if (value == "scalar") return Backend::kScalar;
    if (value == "avx2" && avx2_supported()) return Backend::kAvx2;
    // "auto" and anything unusable fall through to detection
  }
  return auto_backend();
}

std::atomic<const KernelTable*>& active_table() {
  static std::atomic<const KernelTable*> table{table_for(initial_backend())};
  return table;
}

std::atomic<Backend>& active() {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

}  // namespace

bool avx2_supported() {
#if defined(SPINBATH_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() { return active().load(std::memory_order_relaxed); }

const char* backend_name(Backend backend) {
  switch (backend) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
  }
  return "unknown";
}

void set_backend(Backend backend) {
  if (backend == Backend::kAvx2 && !avx2_supported())
    throw std::invalid_argument("avx2 kernels are not supported on this CPU");
  const KernelTable* table = table_for(backend);
  if (table == nullptr)
    throw std::invalid_argument("requested kernel backend is not available in this build");
  active_table().store(table, std::memory_order_relaxed);
  active().store(backend, std::memory_order_relaxed);
}

void reset_backend() { set_backend(initial_backend()); }

void cmul(std::complex<double>* dst, const std::complex<double>* a,
          const std::complex<double>* b, std::size_t n) {
  active_table().load(std::memory_order_relaxed)->cmul(dst, a, b, n);
}

void axpy(double* y, double alpha, const double* x, std::size_t n) {
  active_table().load(std::memory_order_relaxed)->axpy(y, alpha, x, n);
}

void dephase_column(std::complex<double>* out, const std::complex<double>* x,
                    const double* decay, const double* cos_phi,
                    const double* sin_phi, double cos_j, double sin_j,
                    std::size_t n) {
  active_table().load(std::memory_order_relaxed)
      ->dephase_column(out, x, decay, cos_phi, sin_phi, cos_j, sin_j, n);
}

void scale_column(std::complex<double>* out, const std::complex<double>* x,
                  const double* decay, std::size_t n) {
  active_table().load(std::memory_order_relaxed)->scale_column(out, x, decay, n);
}

}  // namespace spinbath::kernels
