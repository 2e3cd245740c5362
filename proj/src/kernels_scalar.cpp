// Reference kernel. The SIMD variants are validated bit-for-bit against this
// implementation, so the arithmetic here is the contract: x = x0 + i*dx,
// squared distance dx*dx + (dy*dy + z2), IEEE sqrt, min keeping earlier sites.

#include <cmath>

#include "planeguard/kernels.hpp"

namespace planeguard::kernels {

void margin_row_scalar(double x0, double dx, std::size_t count, double y,
                       const SiteSet& pursuers, double ex, double ey,
                       double ez2, double* out) {
  const std::size_t n = pursuers.size();
  const double dye = y - ey;
  const double we = dye * dye + ez2;

  for (std::size_t i = 0; i < count; ++i) {
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
