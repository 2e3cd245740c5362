#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "planeguard/kernels.hpp"
#include "planeguard/rng.hpp"

using namespace planeguard;
using kernels::SiteSet;

namespace {

SiteSet random_sites(Rng& rng, int n) {
  SiteSet sites;
  for (int k = 0; k < n; ++k)
    sites.add(rng.uniform(-8, 8), rng.uniform(-8, 8), rng.uniform(-5, 5));
  return sites;
}

}  // namespace

TEST_CASE("scalar kernel matches a plain per-point evaluation") {
  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const SiteSet sites = random_sites(rng, 1 + int(rng.uniform_index(0, 6)));
    const double x0 = rng.uniform(-10, 10);
    const double dx = rng.uniform(1e-4, 0.5);
    const double y = rng.uniform(-10, 10);
    const double ex = rng.uniform(-5, 5), ey = rng.uniform(-5, 5);
    const double ez = rng.uniform(0.1, 4);
    const std::size_t count = 1 + rng.uniform_index(0, 63);

    std::vector<double> out(count);
    kernels::margin_row_scalar(x0, dx, count, y, sites, ex, ey, ez * ez,
                               out.data());
    for (std::size_t i = 0; i < count; ++i) {
      const double x = x0 + double(i) * dx;
      double nearest = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < sites.size(); ++k)
        nearest = std::min(nearest,
                           std::hypot(std::hypot(x - sites.x[k], y - sites.y[k]),
                                      std::sqrt(sites.z2[k])));
      const double de = std::hypot(std::hypot(x - ex, y - ey), ez);
      CHECK(std::fabs(out[i] - (nearest - de)) < 1e-12 * (1.0 + std::fabs(de)));
    }
  }
}

TEST_CASE("simd kernel is bit-identical to the scalar reference") {
  if (!kernels::avx2_available()) {
    MESSAGE("AVX2 not available; dispatch stays on scalar");
    CHECK(kernels::active_backend() == kernels::Backend::Scalar);
    return;
  }

  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const SiteSet sites = random_sites(rng, 1 + int(rng.uniform_index(0, 7)));
    const double x0 = rng.uniform(-50, 50);
    const double dx = rng.uniform(1e-6, 1.0);
    const double y = rng.uniform(-50, 50);
    const double ex = rng.uniform(-5, 5), ey = rng.uniform(-5, 5);
    const double ez2 = rng.uniform(0.01, 25);
    // Cover every tail length around the vector width.
    const std::size_t count = 1 + rng.uniform_index(0, 130);

    std::vector<double> a(count), b(count);
    kernels::margin_row_scalar(x0, dx, count, y, sites, ex, ey, ez2, a.data());
    kernels::margin_row_avx2(x0, dx, count, y, sites, ex, ey, ez2, b.data());
    CHECK(std::memcmp(a.data(), b.data(), count * sizeof(double)) == 0);
  }
}

TEST_CASE("backend override") {
  kernels::set_backend(kernels::Backend::Scalar);
  CHECK(kernels::active_backend() == kernels::Backend::Scalar);
  CHECK(kernels::margin_row() == &kernels::margin_row_scalar);
  kernels::set_backend(kernels::Backend::Auto);
  if (!kernels::avx2_available())
    CHECK_THROWS(kernels::set_backend(kernels::Backend::Avx2));
}
