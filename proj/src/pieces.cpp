#include "planeguard/pieces.hpp"

#include <algorithm>
#include <cmath>

#include "planeguard/rng.hpp"

namespace planeguard {

namespace {

Point3 arc_point(const ArcPiece& arc, double beta) {
  const Point3 q = arc.proj_i * beta + arc.proj_j * (1.0 - beta);
  const double dx = q.x - arc.center.x;
  const double dy = q.y - arc.center.y;
  return {q.x, q.y, lift_height(arc.radius, dx * dx + dy * dy)};
}

// Distance from q to the circular arc lying in the vertical plane through
// `center` with horizontal direction `dir`, restricted to the (s, z>=0)
// angular span between the lifted points at s_lo and s_hi.
double vertical_arc_distance(const Point3& center, double radius,
                             const Point3& dir, double s_lo, double s_hi,
                             const Point3& q) {
  const double wx = q.x - center.x;
  const double wy = q.y - center.y;
  const double s = wx * dir.x + wy * dir.y;       // along the pair line
  const double off = wx * dir.y - wy * dir.x;     // out of the vertical plane

  const double z_lo = lift_height(radius, s_lo * s_lo);
  const double z_hi = lift_height(radius, s_hi * s_hi);
  double a_lo = std::atan2(z_lo, s_lo);
  double a_hi = std::atan2(z_hi, s_hi);
  if (a_lo > a_hi) std::swap(a_lo, a_hi);

  double theta = std::atan2(std::max(q.z, 0.0), s);
  theta = std::clamp(theta, a_lo, a_hi);

  const double ns = radius * std::cos(theta);
  const double nz = radius * std::sin(theta);
  const double ds = s - ns;
  const double dz = q.z - nz;
  return std::sqrt(ds * ds + dz * dz + off * off);
}

double cap_distance(const CapPiece& cap, const Point3& q) {
  const auto& tri = cap.triangle;
  const double area2 = projected_doubled_area(tri[0], tri[1], tri[2]);
  const double sign = area2 >= 0.0 ? 1.0 : -1.0;

  bool inside = true;
  for (int e = 0; e < 3; ++e) {
    const Point3& a = tri[e];
    const Point3& b = tri[(e + 1) % 3];
    if (sign * projected_doubled_area(a, b, q) < 0.0) inside = false;
  }
  if (inside) return std::fabs(dist(q, cap.center) - cap.radius);

  // Outside the triangle: nearest point lies on one of the boundary arcs
  // (cross-sections of the sphere over the triangle edges).
  double best = std::numeric_limits<double>::infinity();
  for (int e = 0; e < 3; ++e) {
    const Point3& a = tri[e];
    const Point3& b = tri[(e + 1) % 3];
    const Point3 ab = b - a;
    const double len = norm(ab);
    if (len <= kGeomEps) continue;
    const Point3 dir{ab.x / len, ab.y / len, 0.0};
    // Foot of the cap center on the edge line.
    const double t = (cap.center.x - a.x) * dir.x + (cap.center.y - a.y) * dir.y;
    const Point3 foot{a.x + t * dir.x, a.y + t * dir.y, 0.0};
    const double off2 = dist_sq(foot, cap.center);
    const double r2 = cap.radius * cap.radius - off2;
    if (r2 <= 0.0) continue;
    const double r_edge = std::sqrt(r2);
    const double s_a = -t;
    const double s_b = len - t;
    best = std::min(best,
                    vertical_arc_distance(foot, r_edge, dir, s_a, s_b, q));
  }
  return best;
}

}  // namespace

std::vector<Point3> sample_piece(const BarrierPiece& piece, int count) {
  std::vector<Point3> out;
  if (piece.empty() || count <= 0) return out;

  if (const auto* pt = std::get_if<PointPiece>(&piece.shape)) {
    out.push_back(pt->location);
    return out;
  }
  if (const auto* arc = std::get_if<ArcPiece>(&piece.shape)) {
    out.reserve(count);
    for (int i = 0; i < count; ++i)
      out.push_back(arc_point(*arc, (i + 0.5) / double(count)));
    return out;
  }
  const auto& cap = std::get<CapPiece>(piece.shape);
  Rng rng(0x9a7c3d41u);  // fixed stream: sampling is part of the test surface
  out.reserve(count);
  const double pull = 1e-3;  // keep barycentrics strictly interior
  while (int(out.size()) < count) {
    double b0 = rng.next_double();
    double b1 = rng.next_double();
    if (b0 + b1 > 1.0) {
      b0 = 1.0 - b0;
      b1 = 1.0 - b1;
    }
    double b2 = 1.0 - b0 - b1;
    b0 = (b0 + pull) / (1.0 + 3.0 * pull);
    b1 = (b1 + pull) / (1.0 + 3.0 * pull);
    b2 = (b2 + pull) / (1.0 + 3.0 * pull);
    const Point3 q = cap.triangle[0] * b0 + cap.triangle[1] * b1 +
                     cap.triangle[2] * b2;
    const double dx = q.x - cap.center.x;
    const double dy = q.y - cap.center.y;
    const double z = lift_height(cap.radius, dx * dx + dy * dy);
    if (z <= 0.0) continue;  // equator grazing (a pursuer on the plane)
    out.push_back({q.x, q.y, z});
  }
  return out;
}

double piece_distance(const BarrierPiece& piece, const Point3& q) {
  if (piece.empty()) return std::numeric_limits<double>::infinity();
  if (const auto* pt = std::get_if<PointPiece>(&piece.shape))
    return dist(q, pt->location);
  if (const auto* arc = std::get_if<ArcPiece>(&piece.shape)) {
    const double s_i = (arc->proj_i.x - arc->center.x) * arc->dir.x +
                       (arc->proj_i.y - arc->center.y) * arc->dir.y;
    const double s_j = (arc->proj_j.x - arc->center.x) * arc->dir.x +
                       (arc->proj_j.y - arc->center.y) * arc->dir.y;
    return vertical_arc_distance(arc->center, arc->radius, arc->dir,
                                 std::min(s_i, s_j), std::max(s_i, s_j), q);
  }
  return cap_distance(std::get<CapPiece>(piece.shape), q);
}

bool pieces_equal(const BarrierPiece& a, const BarrierPiece& b, double tol) {
  if (a.shape.index() != b.shape.index()) return false;
  if (a.empty()) return true;
  if (const auto* pa = std::get_if<PointPiece>(&a.shape)) {
    const auto& pb = std::get<PointPiece>(b.shape);
    return dist(pa->location, pb.location) <= tol;
  }
  if (const auto* aa = std::get_if<ArcPiece>(&a.shape)) {
    const auto& ab = std::get<ArcPiece>(b.shape);
    if (dist(aa->center, ab.center) > tol) return false;
    if (std::fabs(aa->radius - ab.radius) > tol) return false;
    const bool same = dist(aa->proj_i, ab.proj_i) <= tol &&
                      dist(aa->proj_j, ab.proj_j) <= tol;
    const bool swapped = dist(aa->proj_i, ab.proj_j) <= tol &&
                         dist(aa->proj_j, ab.proj_i) <= tol;
    return same || swapped;
  }
  const auto& ca = std::get<CapPiece>(a.shape);
  const auto& cb = std::get<CapPiece>(b.shape);
  if (dist(ca.center, cb.center) > tol) return false;
  if (std::fabs(ca.radius - cb.radius) > tol) return false;
  for (const Point3& v : ca.triangle) {
    bool matched = false;
    for (const Point3& w : cb.triangle)
      if (dist(v, w) <= tol) matched = true;
    if (!matched) return false;
  }
  return true;
}

std::vector<BarrierPiece> dedupe_pieces(std::vector<BarrierPiece> pieces,
                                        double tol) {
  std::vector<BarrierPiece> out;
  for (auto& p : pieces) {
    if (p.empty()) continue;
    bool dup = false;
    for (const auto& q : out)
      if (pieces_equal(p, q, tol)) { dup = true; break; }
    if (!dup) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace planeguard
