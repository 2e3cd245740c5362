// AVX2 margin kernel. Compiled with -mavx2 only (no -mfma): the explicit
// mul/add intrinsics below must not be contracted, and every lane has to
// match kernels_scalar.cpp bit-for-bit (equivalence-tested).

#include "planeguard/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace planeguard::kernels {

void margin_row_avx2(double x0, double dx, std::size_t count, double y,
                     const SiteSet& pursuers, double ex, double ey, double ez2,
                     double* out) {
  const std::size_t n = pursuers.size();
  const double dye = y - ey;
  const double we = dye * dye + ez2;

  const __m256d x0v = _mm256_set1_pd(x0);
  const __m256d dxv = _mm256_set1_pd(dx);
  const __m256d exv = _mm256_set1_pd(ex);
  const __m256d wev = _mm256_set1_pd(we);
  const __m256d four = _mm256_set1_pd(4.0);
  __m256d idx = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);

  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d xv = _mm256_add_pd(x0v, _mm256_mul_pd(idx, dxv));

    __m256d best;
    {
      const __m256d dxp = _mm256_sub_pd(xv, _mm256_set1_pd(pursuers.x[0]));
      const double dy0 = y - pursuers.y[0];
      best = _mm256_add_pd(_mm256_mul_pd(dxp, dxp),
                           _mm256_set1_pd(dy0 * dy0 + pursuers.z2[0]));
    }
    for (std::size_t k = 1; k < n; ++k) {
      const __m256d dxp = _mm256_sub_pd(xv, _mm256_set1_pd(pursuers.x[k]));
      const double dyk = y - pursuers.y[k];
      const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dxp, dxp),
                                       _mm256_set1_pd(dyk * dyk + pursuers.z2[k]));
      best = _mm256_min_pd(d2, best);
    }

    const __m256d dxe = _mm256_sub_pd(xv, exv);
    const __m256d de2 = _mm256_add_pd(_mm256_mul_pd(dxe, dxe), wev);
    const __m256d margin =
        _mm256_sub_pd(_mm256_sqrt_pd(best), _mm256_sqrt_pd(de2));
    _mm256_storeu_pd(out + i, margin);

    idx = _mm256_add_pd(idx, four);
  }

  // Tail: same expressions as the reference loop.
  for (; i < count; ++i) {
    const double x = x0 + double(i) * dx;
    double best;
    {
      const double dxp = x - pursuers.x[0];
      const double dyp = y - pursuers.y[0];
      best = dxp * dxp + (dyp * dyp + pursuers.z2[0]);
    }
    for (std::size_t k = 1; k < n; ++k) {
      const double dxp = x - pursuers.x[k];
      const double dyp = y - pursuers.y[k];
      const double d2 = dxp * dxp + (dyp * dyp + pursuers.z2[k]);
      best = d2 < best ? d2 : best;
    }
    const double dxe = x - ex;
    out[i] = std::sqrt(best) - std::sqrt(dxe * dxe + we);
  }
}

}  // namespace planeguard::kernels

#endif  // x86-64
