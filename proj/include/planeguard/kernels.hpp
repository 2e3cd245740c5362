#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace planeguard::kernels {

/// Pursuer positions in structure-of-arrays form; z is stored squared because
/// target-plane points have z = 0, so only z^2 enters the distance.
struct SiteSet {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> z2;

  void add(double px, double py, double pz) {
    x.push_back(px);
    y.push_back(py);
    z2.push_back(pz * pz);
  }
  std::size_t size() const { return x.size(); }
  void clear() { x.clear(); y.clear(); z2.clear(); }
};

// Writes out[i] = min_k sqrt(dxk*dxk + (dyk*dyk + z2_k))
//               -       sqrt(dxe*dxe + (dye*dye + ez2))
// for the row of target points (x0 + i*dx, y, 0), i in [0, count).
//
// Every variant must produce bit-identical output: plain mul/add (no FMA),
// the association written above, IEEE sqrt, and min that keeps the earlier
// pursuer on ties.
using MarginRowFn = void (*)(double x0, double dx, std::size_t count, double y,
                             const SiteSet& pursuers, double ex, double ey,
                             double ez2, double* out);

void margin_row_scalar(double x0, double dx, std::size_t count, double y,
                       const SiteSet& pursuers, double ex, double ey,
                       double ez2, double* out);

#if defined(__x86_64__) || defined(_M_X64)
void margin_row_avx2(double x0, double dx, std::size_t count, double y,
                     const SiteSet& pursuers, double ex, double ey, double ez2,
                     double* out);
#endif

enum class Backend { Auto, Scalar, Avx2 };

bool avx2_available();
Backend active_backend();
/// Throws std::invalid_argument if the requested backend is unavailable.
void set_backend(Backend backend);
MarginRowFn margin_row();
std::string backend_name(Backend backend);

}  // namespace planeguard::kernels
