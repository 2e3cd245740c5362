#include "planeguard/lp2d.hpp"

#include <cmath>
#include <cstddef>

namespace planeguard {

namespace {

struct Row {
  double a, b, s, c;  // a*x + b*y + s*slack <= c, with (a,b) unit length
};

}  // namespace

ChebyshevResult chebyshev_center(std::span<const HalfPlane> planes,
                                 double box_radius) {
  std::vector<Row> rows;
  rows.reserve(planes.size() + 4);
  for (const HalfPlane& h : planes) {
    const double len = std::hypot(h.a, h.b);
    if (len <= 0.0) continue;  // caller resolves trivially-true/false rows
    rows.push_back({h.a / len, h.b / len, 1.0, h.c / len});
  }
  const double r = box_radius;
  rows.push_back({1.0, 0.0, 1.0, r});
  rows.push_back({-1.0, 0.0, 1.0, r});
  rows.push_back({0.0, 1.0, 1.0, r});
  rows.push_back({0.0, -1.0, 1.0, r});

  const std::size_t m = rows.size();
  const double feas_eps = 1e-9 * (1.0 + std::fabs(r));

  ChebyshevResult best;
  auto consider = [&](double x, double y, double s) {
    for (const Row& row : rows)
      if (row.a * x + row.b * y + row.s * s > row.c + feas_eps) return;
    if (!best.found || s > best.slack ||
        (s == best.slack && (x < best.x || (x == best.x && y < best.y)))) {
      best.found = true;
      best.slack = s;
      best.x = x;
      best.y = y;
    }
  };

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        const Row& r1 = rows[i];
        const Row& r2 = rows[j];
        const Row& r3 = rows[k];
        // Cramer's rule on the 3x3 active-constraint system.
        const double det = r1.a * (r2.b * r3.s - r2.s * r3.b) -
                           r1.b * (r2.a * r3.s - r2.s * r3.a) +
                           r1.s * (r2.a * r3.b - r2.b * r3.a);
        if (std::fabs(det) < 1e-12) continue;
        const double dx = r1.c * (r2.b * r3.s - r2.s * r3.b) -
                          r1.b * (r2.c * r3.s - r2.s * r3.c) +
                          r1.s * (r2.c * r3.b - r2.b * r3.c);
        const double dy = r1.a * (r2.c * r3.s - r2.s * r3.c) -
                          r1.c * (r2.a * r3.s - r2.s * r3.a) +
                          r1.s * (r2.a * r3.c - r2.c * r3.a);
        const double ds = r1.a * (r2.b * r3.c - r2.c * r3.b) -
                          r1.b * (r2.a * r3.c - r2.c * r3.a) +
                          r1.c * (r2.a * r3.b - r2.b * r3.a);
        consider(dx / det, dy / det, ds / det);
      }
    }
  }
  return best;
}

}  // namespace planeguard
