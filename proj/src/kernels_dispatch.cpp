#include <atomic>
#include <stdexcept>

#include "planeguard/kernels.hpp"

namespace planeguard::kernels {

bool avx2_available() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

MarginRowFn resolve(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return &margin_row_scalar;
    case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (avx2_available()) return &margin_row_avx2;
#endif
      throw std::invalid_argument("AVX2 kernel unavailable on this host");
    case Backend::Auto:
#if defined(__x86_64__) || defined(_M_X64)
      if (avx2_available()) return &margin_row_avx2;
#endif
      return &margin_row_scalar;
  }
  return &margin_row_scalar;
}

std::atomic<Backend> g_backend{Backend::Auto};

}  // namespace

Backend active_backend() {
  const Backend b = g_backend.load();
  if (b != Backend::Auto) return b;
  return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

void set_backend(Backend backend) {
  resolve(backend);  // validates availability
  g_backend.store(backend);
}

MarginRowFn margin_row() { return resolve(g_backend.load()); }

std::string backend_name(Backend backend) {
  switch (backend) {
    case Backend::Auto: return "auto";
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "unknown";
}

}  // namespace planeguard::kernels
