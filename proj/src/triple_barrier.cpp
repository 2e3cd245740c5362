#include "planeguard/triple_barrier.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace planeguard {

BarrierPiece single_barrier(const Point3& p) {
  if (p.z < 0.0) return {PointPiece{reflect_across_target(p)}, "point{1}"};
  return {};
}

bool single_pursuer_region_contains(const Point3& p, const Point3& q) {
  if (!(q.z > 0.0))
    fail(ErrorCode::EvaderNotInPlay, "query point must lie in the play side");
  return same_projection(p, q) && q.z > std::fabs(p.z);
}

namespace {

bool single_region_lenient(const Point3& p, const Point3& q) {
  return q.z > 0.0 && same_projection(p, q) && q.z > std::fabs(p.z);
}

// Eq-style membership of the third pursuer (or its mirror) in the pair's
// winning strip; decides whether the pair rules alone.
bool third_is_excluded(const Point3& p_i, const Point3& p_j,
                       const Point3& p_k) {
  return pair_region_contains_lenient(p_i, p_j, p_k) ||
         pair_region_contains_lenient(p_i, p_j, reflect_across_target(p_k));
}

}  // namespace

TripleClass classify_triple(const Point3& p1, const Point3& p2,
                            const Point3& p3) {
  const std::array<Point3, 3> p{p1, p2, p3};
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (dist(p[a], p[b]) <= kGeomEps)
        fail(ErrorCode::CoincidentPursuers, "triple pursuers coincide");

  // One pursuer rules: shared projection with both others and strictly the
  // smallest height.
  for (int i = 0; i < 3; ++i) {
    bool rules = true;
    for (int k = 0; k < 3 && rules; ++k) {
      if (k == i) continue;
      rules = same_projection(p[i], p[k]) &&
              std::fabs(p[i].z) < std::fabs(p[k].z) - kGeomEps;
    }
    if (rules) return {TripleTag::One, i, -1};
  }

  // A pair rules: the remaining pursuer (or its mirror) sits in the pair's
  // winning strip, or forms a mirrored couple with one of the pair.
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const int k = 3 - i - j;
      const bool pair_ok = !same_projection(p[i], p[j]);
      if (pair_ok && third_is_excluded(p[i], p[j], p[k]))
        return {TripleTag::Two, std::min(i, j), std::max(i, j)};
      const bool mirrored = same_projection(p[i], p[k]) &&
                            std::fabs(p[i].z + p[k].z) <= kGeomEps &&
                            p[i].z > kGeomEps;
      if (mirrored && !single_region_lenient(p[j], p[i]))
        return {TripleTag::Two, std::min(i, j), std::max(i, j)};
    }
  }

  // All three matter: every pair is active and never excludes the third.
  bool three = true;
  for (int i = 0; i < 3 && three; ++i) {
    for (int j = i + 1; j < 3 && three; ++j) {
      const int k = 3 - i - j;
      three = !same_projection(p[i], p[j]) && !third_is_excluded(p[i], p[j], p[k]);
    }
  }
  if (three) {
    const double area2 = projected_doubled_area(p1, p2, p3);
    if (std::fabs(area2) > 2.0 * kGeomEps) return {TripleTag::Three, -1, -1};
    // Collinear projections: find the middle one along the line.
    const std::array<Point3, 3> proj{project_to_target(p1),
                                     project_to_target(p2),
                                     project_to_target(p3)};
    int lo = 0;
    int hi = 0;
    double best = -1.0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        const double d = dist(proj[a], proj[b]);
        if (d > best) { best = d; lo = a; hi = b; }
      }
    const int mid = 3 - lo - hi;
    const double span = dist(proj[lo], proj[hi]);
    const double t = ((proj[mid] - proj[lo]).x * (proj[hi] - proj[lo]).x +
                      (proj[mid] - proj[lo]).y * (proj[hi] - proj[lo]).y) /
                     (span * span);
    if (t > kGeomEps && t < 1.0 - kGeomEps)
      return {TripleTag::ThreeCollinear, mid, -1};
    fail(ErrorCode::DegenerateConfiguration,
         "collinear projections without a strict middle pursuer");
  }
  fail(ErrorCode::DegenerateConfiguration,
       "three-pursuer classification matched no branch within tolerance");
}

Point3 equidistant_point(const Point3& p1, const Point3& p2,
                         const Point3& p3) {
  const double area2 = projected_doubled_area(p1, p2, p3);
  if (std::fabs(area2) <= 2.0 * kGeomEps)
    fail(ErrorCode::CollinearProjections,
         "equidistant point needs noncollinear projections");

  const auto power = [](const Point3& p) {
    return p.x * p.x + p.y * p.y + p.z * p.z;
  };
  // 2 (p_b - p_a) . c = |p_b|^2 - |p_a|^2 for the two independent pairs.
  const double a11 = 2.0 * (p2.x - p1.x), a12 = 2.0 * (p2.y - p1.y);
  const double a21 = 2.0 * (p3.x - p1.x), a22 = 2.0 * (p3.y - p1.y);
  const double r1 = power(p2) - power(p1);
  const double r2 = power(p3) - power(p1);
  const double det = a11 * a22 - a12 * a21;
  const Point3 c{(r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det, 0.0};

  const double d1 = dist(c, p1), d2 = dist(c, p2), d3 = dist(c, p3);
  const double spread =
      std::max({d1, d2, d3}) - std::min({d1, d2, d3});
  if (spread > 1e-9 * (1.0 + d1))
    fail(ErrorCode::DegenerateConfiguration,
         "equidistant point residual beyond tolerance");
  return c;
}

CapPiece triple_barrier_noncollinear(const Point3& p1, const Point3& p2,
                                     const Point3& p3) {
  const TripleClass cls = classify_triple(p1, p2, p3);
  if (cls.tag == TripleTag::ThreeCollinear)
    fail(ErrorCode::CollinearProjections,
         "collinear projections take the two-arc barrier");
  if (cls.tag != TripleTag::Three)
    fail(ErrorCode::DegenerateConfiguration,
         "cap barrier needs all three pursuers to matter");

  CapPiece cap;
  cap.center = equidistant_point(p1, p2, p3);
  cap.radius = dist(cap.center, p1);
  cap.triangle = {project_to_target(p1), project_to_target(p2),
                  project_to_target(p3)};
  return cap;
}

std::vector<BarrierPiece> triple_barrier_collinear(const Point3& p1,
                                                   const Point3& p2,
                                                   const Point3& p3,
                                                   int middle) {
  const TripleClass cls = classify_triple(p1, p2, p3);
  if (cls.tag != TripleTag::ThreeCollinear || cls.i != middle)
    fail(ErrorCode::NotCollinearCase,
         "arguments are not a collinear triple with this middle pursuer");

  const std::array<Point3, 3> p{p1, p2, p3};
  std::vector<BarrierPiece> pieces;
  for (int k = 0; k < 3; ++k) {
    if (k == middle) continue;
    auto part = pair_barrier(p[middle], p[k]);
    for (auto& piece : part) {
      if (std::holds_alternative<PointPiece>(piece.shape)) {
        const auto& loc = std::get<PointPiece>(piece.shape).location;
        const int owner =
            same_projection(loc, p[middle]) ? middle : k;
        piece.tag = "point{" + std::to_string(owner + 1) + "}";
      } else {
        piece.tag = "arc{" + std::to_string(middle + 1) + "," +
                    std::to_string(k + 1) + "}";
      }
      pieces.push_back(std::move(piece));
    }
  }
  return dedupe_pieces(std::move(pieces));
}

bool triple_pursuer_region_contains(const Point3& p1, const Point3& p2,
                                    const Point3& p3, const Point3& q) {
  if (!(q.z > 0.0))
    fail(ErrorCode::EvaderNotInPlay, "query point must lie in the play side");

  const TripleClass cls = classify_triple(p1, p2, p3);
  const std::array<Point3, 3> p{p1, p2, p3};
  if (cls.tag == TripleTag::Three) {
    const CapPiece cap = triple_barrier_noncollinear(p1, p2, p3);
    const BarrierPiece piece{cap, ""};
    // Closed triangle within tolerance, strictly outside the sphere.
    const double area2 =
        projected_doubled_area(cap.triangle[0], cap.triangle[1], cap.triangle[2]);
    const double sign = area2 >= 0.0 ? 1.0 : -1.0;
    for (int e = 0; e < 3; ++e) {
      const Point3& a = cap.triangle[e];
      const Point3& b = cap.triangle[(e + 1) % 3];
      const double edge = dist(a, b);
      if (sign * projected_doubled_area(a, b, q) < -kGeomEps * edge)
        return false;
    }
    return dist(q, cap.center) > cap.radius;
  }
  if (cls.tag == TripleTag::ThreeCollinear) {
    for (int k = 0; k < 3; ++k) {
      if (k == cls.i) continue;
      if (pair_region_contains_lenient(p[cls.i], p[k], q)) return true;
    }
    return false;
  }
  fail(ErrorCode::DegenerateConfiguration,
       "three-pursuer region test needs the Three or ThreeCollinear class");
}

bool triple_region_contains_any(const Point3& p1, const Point3& p2,
                                const Point3& p3, const Point3& q) {
  if (!(q.z > 0.0))
    fail(ErrorCode::EvaderNotInPlay, "query point must lie in the play side");
  const TripleClass cls = classify_triple(p1, p2, p3);
  const std::array<Point3, 3> p{p1, p2, p3};
  switch (cls.tag) {
    case TripleTag::One:
      return single_region_lenient(p[cls.i], q);
    case TripleTag::Two:
      return pair_region_contains_lenient(p[cls.i], p[cls.j], q);
    default:
      return triple_pursuer_region_contains(p1, p2, p3, q);
  }
}

}  // namespace planeguard
