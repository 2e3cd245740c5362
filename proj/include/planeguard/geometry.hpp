#pragma once

#include <array>
#include <cmath>

#include "planeguard/errors.hpp"

namespace planeguard {

// Absolute tolerance for "equal coordinate" / degeneracy decisions.
// Problems are assumed to be unit-scale; inputs are not rescaled.
inline constexpr double kGeomEps = 1e-9;

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Point3() = default;
  Point3(double px, double py, double pz) : x(px), y(py), z(pz) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
      fail(ErrorCode::NonFiniteCoordinate, "point has non-finite coordinate");
  }

  Point3 operator+(const Point3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Point3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Point3 operator*(double s) const { return {x * s, y * s, z * s}; }
  bool operator==(const Point3& o) const = default;
};

inline Point3 operator*(double s, const Point3& p) { return p * s; }

inline double dot(const Point3& a, const Point3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Fixed association: dx*dx + (dy*dy + dz*dz). The margin kernels replicate
// this exact expression; changing it breaks scalar/SIMD bit parity.
inline double dist_sq(const Point3& a, const Point3& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return dx * dx + (dy * dy + dz * dz);
}

inline double dist(const Point3& a, const Point3& b) {
  return std::sqrt(dist_sq(a, b));
}

inline double norm(const Point3& p) { return std::sqrt(dot(p, p)); }

struct TargetPlaneSpec {
  Point3 normal;  // K
  double offset = 0.0;  // b; plane is K.p = b, play side K.p > b
};

/// Rigid map taking the plane K.p = b to z = 0 with the play side mapped to
/// z > 0. rows of `rotation` are the canonical x/y/z axes in raw coordinates.
struct CanonicalFrame {
  std::array<std::array<double, 3>, 3> rotation;
  Point3 translation;  // a point on the target plane
};

CanonicalFrame canonical_frame(const TargetPlaneSpec& spec);
Point3 to_canonical(const CanonicalFrame& frame, const Point3& p);
Point3 from_canonical(const CanonicalFrame& frame, const Point3& p);

inline Point3 project_to_target(const Point3& p) { return {p.x, p.y, 0.0}; }
inline Point3 reflect_across_target(const Point3& p) { return {p.x, p.y, -p.z}; }

inline bool same_projection(const Point3& a, const Point3& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy <= kGeomEps * kGeomEps;
}

/// Twice the signed area of the projected triangle (z dropped).
inline double projected_doubled_area(const Point3& a, const Point3& b, const Point3& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace planeguard
