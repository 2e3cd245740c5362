#include "planeguard/pair_barrier.hpp"

#include <cmath>

#include "planeguard/triple_barrier.hpp"

namespace planeguard {

PairClass classify_pair(const Point3& p_i, const Point3& p_j) {
  if (dist(p_i, p_j) <= kGeomEps)
    fail(ErrorCode::CoincidentPursuers, "pair pursuers coincide");
  if (!same_projection(p_i, p_j)) return {PairTag::BothActive, -1};

  const double zi = std::fabs(p_i.z);
  const double zj = std::fabs(p_j.z);
  if (std::fabs(zi - zj) <= kGeomEps) return {PairTag::EmptyBarrier, -1};
  return {PairTag::SingleActive, zi < zj ? 0 : 1};
}

Point3 equal_time_point(const Point3& p_i, const Point3& p_j) {
  if (classify_pair(p_i, p_j).tag != PairTag::BothActive)
    fail(ErrorCode::NotBothActive, "equal-time point needs both pursuers active");

  const Point3 a = project_to_target(p_i);
  const Point3 b = project_to_target(p_j);
  const Point3 d = b - a;
  const double len = norm(d);
  const Point3 dir{d.x / len, d.y / len, 0.0};
  // dist(c, p_i)^2 = s^2 + z_i^2 and dist(c, p_j)^2 = (len - s)^2 + z_j^2.
  const double s = (len * len + p_j.z * p_j.z - p_i.z * p_i.z) / (2.0 * len);
  return a + dir * s;
}

ArcPiece make_pair_arc(const Point3& p_i, const Point3& p_j) {
  ArcPiece arc;
  arc.center = equal_time_point(p_i, p_j);
  arc.radius = dist(arc.center, p_i);
  const double check = dist(arc.center, p_j);
  if (std::fabs(check - arc.radius) > kGeomEps)
    fail(ErrorCode::DegenerateConfiguration,
         "equal-time point radii diverge beyond tolerance");
  arc.proj_i = project_to_target(p_i);
  arc.proj_j = project_to_target(p_j);
  const Point3 d = arc.proj_i - arc.proj_j;
  const double len = norm(d);
  arc.dir = {d.x / len, d.y / len, 0.0};
  return arc;
}

std::vector<BarrierPiece> pair_barrier(const Point3& p_i, const Point3& p_j) {
  if (classify_pair(p_i, p_j).tag != PairTag::BothActive)
    fail(ErrorCode::NotBothActive, "pair barrier needs both pursuers active");

  std::vector<BarrierPiece> pieces;
  BarrierPiece bi = single_barrier(p_i);
  bi.tag = "point{1}";
  BarrierPiece bj = single_barrier(p_j);
  bj.tag = "point{2}";
  if (!bi.empty()) pieces.push_back(std::move(bi));
  if (!bj.empty()) pieces.push_back(std::move(bj));
  pieces.push_back({make_pair_arc(p_i, p_j), "arc{1,2}"});
  return pieces;
}

bool pair_region_contains_lenient(const Point3& p_i, const Point3& p_j,
                                  const Point3& q) {
  if (!(q.z > 0.0)) return false;
  const ArcPiece arc = make_pair_arc(p_i, p_j);

  const double wx = q.x - arc.proj_j.x;
  const double wy = q.y - arc.proj_j.y;
  const double off = wx * arc.dir.y - wy * arc.dir.x;
  if (std::fabs(off) > kGeomEps) return false;  // off the vertical plane

  const double len = dist(arc.proj_i, arc.proj_j);
  const double s = wx * arc.dir.x + wy * arc.dir.y;  // = beta * len
  if (s < -kGeomEps || s > len + kGeomEps) return false;

  return dist(q, arc.center) > arc.radius;
}

bool pair_pursuer_region_contains(const Point3& p_i, const Point3& p_j,
                                  const Point3& q) {
  if (classify_pair(p_i, p_j).tag != PairTag::BothActive)
    fail(ErrorCode::NotBothActive, "pair region needs both pursuers active");
  if (!(q.z > 0.0))
    fail(ErrorCode::EvaderNotInPlay, "query point must lie in the play side");
  return pair_region_contains_lenient(p_i, p_j, q);
}

}  // namespace planeguard
