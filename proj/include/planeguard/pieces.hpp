#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "planeguard/geometry.hpp"

namespace planeguard {

/// Mirror point of a below-plane pursuer; the pursuer-win set above it is the
/// vertical ray z > location.z through the same projection.
struct PointPiece {
  Point3 location;  // z > 0 (z == 0 pursuers contribute no point piece)
};

/// Circle segment in the vertical plane through two pursuer projections,
/// centered on the target plane at the pair's equal-time point. The open
/// segment spans the lifted projections of both pursuers (their mirror
/// heights), i.e. beta strictly inside (0, 1).
struct ArcPiece {
  Point3 center;    // z = 0
  double radius = 0.0;
  Point3 dir;       // unit, z = 0, points from proj_j toward proj_i
  Point3 proj_i;    // pursuer projections (z = 0); beta = 1 at proj_i
  Point3 proj_j;
};

/// Spherical patch over the closed triangle of three pursuer projections,
/// centered on the target plane at their equal-distance point.
struct CapPiece {
  Point3 center;  // z = 0
  double radius = 0.0;
  std::array<Point3, 3> triangle;  // projections, z = 0
};

struct BarrierPiece {
  std::variant<std::monostate, PointPiece, ArcPiece, CapPiece> shape;
  std::string tag;  // e.g. "point{2}", "arc{1,3}", "cap{1,2,6}"

  bool empty() const { return std::holds_alternative<std::monostate>(shape); }
};

/// Deterministic samples on the piece surface (open arc interior, strictly
/// interior cap points). Empty pieces yield nothing, point pieces the point.
std::vector<Point3> sample_piece(const BarrierPiece& piece, int count);

/// 3D distance from q to the (closed) piece surface.
double piece_distance(const BarrierPiece& piece, const Point3& q);

/// Pointwise equality of two pieces within tol.
bool pieces_equal(const BarrierPiece& a, const BarrierPiece& b, double tol);

/// Removes duplicates (pairwise equality within tol), keeping first.
std::vector<BarrierPiece> dedupe_pieces(std::vector<BarrierPiece> pieces,
                                        double tol = kGeomEps);

/// Height of the arc/cap surface above a planar point at squared center
/// distance d2 (clamped at zero).
inline double lift_height(double radius, double d2) {
  const double h2 = radius * radius - d2;
  return h2 > 0.0 ? std::sqrt(h2) : 0.0;
}

}  // namespace planeguard
