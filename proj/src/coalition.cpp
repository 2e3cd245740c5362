#include "planeguard/coalition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "planeguard/lp2d.hpp"
#include "planeguard/pair_barrier.hpp"
#include "planeguard/triple_barrier.hpp"

namespace planeguard {

const char* verdict_name(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::PursuerWin: return "PursuerWin";
    case VerdictTag::EvaderWin: return "EvaderWin";
    case VerdictTag::OnBarrier: return "OnBarrier";
  }
  return "Unknown";
}

GameConfig make_game_config(std::vector<Point3> pursuers,
                            std::optional<Point3> evader) {
  if (pursuers.empty())
    fail(ErrorCode::EmptyPursuerSet, "a game needs at least one pursuer");
  for (std::size_t a = 0; a < pursuers.size(); ++a)
    for (std::size_t b = a + 1; b < pursuers.size(); ++b)
      if (dist(pursuers[a], pursuers[b]) <= kGeomEps)
        fail(ErrorCode::DuplicatePlayers,
             "pursuers " + std::to_string(a + 1) + " and " +
                 std::to_string(b + 1) + " coincide");
  if (evader) {
    if (!(evader->z > 0.0))
      fail(ErrorCode::EvaderNotInPlay, "evader must start with z > 0");
    for (std::size_t a = 0; a < pursuers.size(); ++a)
      if (dist(pursuers[a], *evader) <= kGeomEps)
        fail(ErrorCode::DuplicatePlayers,
             "evader coincides with pursuer " + std::to_string(a + 1));
  }
  return {std::move(pursuers), evader};
}

namespace {

double arrival_power(const Point3& p) {
  return p.x * p.x + p.y * p.y + p.z * p.z;
}

std::string tag_indices(const char* kind, std::span<const int> idx) {
  std::string tag = kind;
  tag += '{';
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) tag += ',';
    tag += std::to_string(idx[i] + 1);
  }
  tag += '}';
  return tag;
}

}  // namespace

std::vector<int> active_pursuers(std::span<const Point3> pursuers) {
  const std::size_t n = pursuers.size();
  if (n == 0)
    fail(ErrorCode::EmptyPursuerSet, "active test needs pursuers");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (dist(pursuers[a], pursuers[b]) <= kGeomEps)
        fail(ErrorCode::CoincidentPursuers, "pursuers coincide");

  std::vector<int> active;
  double scale = 0.0;
  for (const Point3& p : pursuers)
    scale = std::max({scale, std::fabs(p.x), std::fabs(p.y), std::fabs(p.z)});

  for (std::size_t k = 0; k < n; ++k) {
    // k first at t iff |t - p_k|^2 + z_k^2 < |t - p_m|^2 + z_m^2 for all m;
    // the quadratic terms cancel, leaving one half-plane per opponent.
    std::vector<HalfPlane> rows;
    bool blocked = false;
    double reach = 0.0;
    for (std::size_t m = 0; m < n && !blocked; ++m) {
      if (m == k) continue;
      const double a = 2.0 * (pursuers[k].x - pursuers[m].x);
      const double b = 2.0 * (pursuers[k].y - pursuers[m].y);
      const double c = arrival_power(pursuers[m]) - arrival_power(pursuers[k]);
      const double len = std::hypot(a, b);
      if (len <= 2.0 * kGeomEps) {
        // Same projection: arrival times coincide up to height. A mirrored
        // twin (equal |z|) is the same arrival field entirely; the
        // above-plane member stays eligible so the pair behaves like the
        // single pursuer it is. Otherwise the lower pursuer wins everywhere.
        const double zk = std::fabs(pursuers[k].z);
        const double zm = std::fabs(pursuers[m].z);
        if (std::fabs(zk - zm) <= kGeomEps) {
          if (pursuers[k].z < pursuers[m].z) blocked = true;
        } else if (zm < zk) {
          blocked = true;
        }
        continue;
      }
      rows.push_back({a, b, c});
      reach = std::max(reach, std::fabs(c) / len);
    }
    if (blocked) continue;
    if (rows.empty()) {
      active.push_back(int(k));
      continue;
    }
    const double box = 100.0 * (1.0 + reach + scale);
    const ChebyshevResult r = chebyshev_center(rows, box);
    if (r.found && r.slack > kGeomEps) active.push_back(int(k));
  }
  return active;
}

CoalitionSet active_triples(std::span<const Point3> pursuers,
                            const std::vector<int>& active) {
  CoalitionSet out;
  out.active = active;
  const std::size_t na = active.size();
  if (na == 0) return out;
  if (na == 1) {
    out.singles.push_back(active[0]);
    return out;
  }
  if (na == 2) {
    out.pairs.push_back({active[0], active[1]});
    return out;
  }

  // Collinearity of all active projections.
  int lo = active[0];
  int hi = active[1];
  double span = 0.0;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = a + 1; b < na; ++b) {
      const double d = dist(project_to_target(pursuers[active[a]]),
                            project_to_target(pursuers[active[b]]));
      if (d > span) { span = d; lo = active[a]; hi = active[b]; }
    }
  const Point3 origin = project_to_target(pursuers[lo]);
  const Point3 axis = project_to_target(pursuers[hi]) - origin;
  const Point3 dir{axis.x / span, axis.y / span, 0.0};
  bool collinear = true;
  for (int idx : active) {
    const Point3 w = project_to_target(pursuers[idx]) - origin;
    if (std::fabs(w.x * dir.y - w.y * dir.x) > kGeomEps) {
      collinear = false;
      break;
    }
  }

  if (collinear) {
    std::vector<std::pair<double, int>> order;
    for (int idx : active) {
      const Point3 w = project_to_target(pursuers[idx]) - origin;
      order.emplace_back(w.x * dir.x + w.y * dir.y, idx);
    }
    std::sort(order.begin(), order.end());
    for (std::size_t a = 0; a + 1 < order.size(); ++a) {
      const int i = order[a].second;
      const int j = order[a + 1].second;
      const Point3 c = equal_time_point(pursuers[i], pursuers[j]);
      const double d = dist(c, pursuers[i]);
      for (int m : active) {
        if (m == i || m == j) continue;
        const double dm = dist(c, pursuers[m]);
        if (std::fabs(dm - d) <= kGeomEps)
          fail(ErrorCode::DegenerateConfiguration,
               "equal-time tie between pair {" + std::to_string(i + 1) + "," +
                   std::to_string(j + 1) + "} and pursuer " +
                   std::to_string(m + 1));
        if (dm < d)
          fail(ErrorCode::DegenerateConfiguration,
               "collinear chain broken at pair {" + std::to_string(i + 1) +
                   "," + std::to_string(j + 1) + "}");
      }
      out.pairs.push_back({i, j});
    }
    return out;
  }

  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = a + 1; b < na; ++b) {
      for (std::size_t c3 = b + 1; c3 < na; ++c3) {
        const int i = active[a], j = active[b], k = active[c3];
        const double area2 = projected_doubled_area(
            pursuers[i], pursuers[j], pursuers[k]);
        if (std::fabs(area2) <= 2.0 * kGeomEps) continue;
        const Point3 c = equidistant_point(pursuers[i], pursuers[j],
                                           pursuers[k]);
        const double d = dist(c, pursuers[i]);
        bool wins = true;
        for (int m : active) {
          if (m == i || m == j || m == k) continue;
          const double dm = dist(c, pursuers[m]);
          if (std::fabs(dm - d) <= kGeomEps)
            fail(ErrorCode::DegenerateConfiguration,
                 "co-spherical tie: triple {" + std::to_string(i + 1) + "," +
                     std::to_string(j + 1) + "," + std::to_string(k + 1) +
                     "} against pursuer " + std::to_string(m + 1));
          if (dm < d) { wins = false; break; }
        }
        if (wins) out.triples.push_back({i, j, k});
      }
    }
  }
  if (out.triples.empty())
    fail(ErrorCode::DegenerateConfiguration,
         "no winning triple among noncollinear active pursuers");
  return out;
}

std::vector<BarrierPiece> coalition_pieces(std::span<const Point3> pursuers,
                                           const CoalitionSet& coalitions) {
  std::vector<BarrierPiece> pieces;

  for (int idx : coalitions.singles) {
    BarrierPiece piece = single_barrier(pursuers[idx]);
    if (!piece.empty()) {
      piece.tag = tag_indices("point", std::array<int, 1>{idx});
      pieces.push_back(std::move(piece));
    }
  }

  for (const auto& pr : coalitions.pairs) {
    auto part = pair_barrier(pursuers[pr[0]], pursuers[pr[1]]);
    for (auto& piece : part) {
      if (std::holds_alternative<PointPiece>(piece.shape)) {
        const auto& loc = std::get<PointPiece>(piece.shape).location;
        const int owner =
            same_projection(loc, pursuers[pr[0]]) ? pr[0] : pr[1];
        piece.tag = tag_indices("point", std::array<int, 1>{owner});
      } else {
        piece.tag = tag_indices("arc", pr);
      }
      pieces.push_back(std::move(piece));
    }
  }

  for (const auto& tr : coalitions.triples) {
    CapPiece cap;
    cap.center = equidistant_point(pursuers[tr[0]], pursuers[tr[1]],
                                   pursuers[tr[2]]);
    cap.radius = dist(cap.center, pursuers[tr[0]]);
    cap.triangle = {project_to_target(pursuers[tr[0]]),
                    project_to_target(pursuers[tr[1]]),
                    project_to_target(pursuers[tr[2]])};
    pieces.push_back({cap, tag_indices("cap", tr)});
  }

  return dedupe_pieces(std::move(pieces));
}

namespace {

// Caps of coalitions sharing a pursuer pair must agree over the shared edge
// (both spheres contain the pair's cross-circle). Asserted, not repaired.
void check_shared_edges(const CoalitionSet& coalitions,
                        std::span<const Point3> pursuers) {
  const auto& triples = coalitions.triples;
  for (std::size_t a = 0; a < triples.size(); ++a) {
    for (std::size_t b = a + 1; b < triples.size(); ++b) {
      std::vector<int> shared;
      for (int i : triples[a])
        for (int j : triples[b])
          if (i == j) shared.push_back(i);
      if (shared.size() != 2) continue;
      const Point3 mid =
          (project_to_target(pursuers[shared[0]]) +
           project_to_target(pursuers[shared[1]])) * 0.5;
      double height[2];
      const std::array<std::size_t, 2> which{a, b};
      for (int s = 0; s < 2; ++s) {
        const auto& tr = triples[which[s]];
        const Point3 c = equidistant_point(pursuers[tr[0]], pursuers[tr[1]],
                                           pursuers[tr[2]]);
        const double r = dist(c, pursuers[tr[0]]);
        height[s] = lift_height(r, dist_sq(mid, c));
      }
      if (std::fabs(height[0] - height[1]) > 1e-9 * (1.0 + height[0]))
        fail(ErrorCode::DegenerateConfiguration,
             "adjacent caps disagree over shared pursuers {" +
                 std::to_string(shared[0] + 1) + "," +
                 std::to_string(shared[1] + 1) + "}");
    }
  }
}

}  // namespace

std::vector<BarrierPiece> multi_barrier(const GameConfig& config) {
  make_game_config(config.pursuers, config.evader);  // revalidate
  const std::vector<int> active = active_pursuers(config.pursuers);
  const CoalitionSet coalitions = active_triples(config.pursuers, active);
  check_shared_edges(coalitions, config.pursuers);
  return coalition_pieces(config.pursuers, coalitions);
}

Verdict classify_initial_state(const GameConfig& config, double band) {
  if (!config.evader)
    fail(ErrorCode::EvaderNotInPlay, "verdict needs an evader position");
  const Point3 q = *config.evader;
  if (!(q.z > 0.0))
    fail(ErrorCode::EvaderNotInPlay, "evader must start with z > 0");

  const std::vector<BarrierPiece> pieces = multi_barrier(config);

  double best_excess = -std::numeric_limits<double>::infinity();
  const std::string* best_tag = nullptr;
  double nearest = std::numeric_limits<double>::infinity();
  const std::string* nearest_tag = nullptr;

  for (const BarrierPiece& piece : pieces) {
    const double d = piece_distance(piece, q);
    if (d < nearest) {
      nearest = d;
      nearest_tag = &piece.tag;
    }

    // Gated radial excess: only where the piece's winning region applies.
    double excess = -std::numeric_limits<double>::infinity();
    if (const auto* pt = std::get_if<PointPiece>(&piece.shape)) {
      if (same_projection(q, pt->location)) excess = q.z - pt->location.z;
    } else if (const auto* arc = std::get_if<ArcPiece>(&piece.shape)) {
      const double wx = q.x - arc->proj_j.x;
      const double wy = q.y - arc->proj_j.y;
      const double off = wx * arc->dir.y - wy * arc->dir.x;
      const double len = dist(arc->proj_i, arc->proj_j);
      const double s = wx * arc->dir.x + wy * arc->dir.y;
      if (std::fabs(off) <= kGeomEps && s >= -kGeomEps && s <= len + kGeomEps)
        excess = dist(q, arc->center) - arc->radius;
    } else if (const auto* cap = std::get_if<CapPiece>(&piece.shape)) {
      const double area2 = projected_doubled_area(
          cap->triangle[0], cap->triangle[1], cap->triangle[2]);
      const double sign = area2 >= 0.0 ? 1.0 : -1.0;
      bool inside = true;
      for (int e = 0; e < 3 && inside; ++e) {
        const Point3& a = cap->triangle[e];
        const Point3& b = cap->triangle[(e + 1) % 3];
        const double edge = dist(a, b);
        inside = sign * projected_doubled_area(a, b, q) >= -kGeomEps * edge;
      }
      if (inside) excess = dist(q, cap->center) - cap->radius;
    }
    if (excess > best_excess) {
      best_excess = excess;
      best_tag = &piece.tag;
    }
  }

  Verdict verdict;
  if (nearest <= band) {
    verdict.tag = VerdictTag::OnBarrier;
    verdict.margin = std::isfinite(best_excess) ? best_excess : 0.0;
    verdict.details = nearest_tag ? *nearest_tag : "none";
    return verdict;
  }
  if (std::isfinite(best_excess) && best_excess > band) {
    verdict.tag = VerdictTag::PursuerWin;
    verdict.margin = best_excess;
    verdict.details = best_tag ? *best_tag : "none";
    return verdict;
  }
  if (std::isfinite(best_excess) && std::fabs(best_excess) <= band) {
    verdict.tag = VerdictTag::OnBarrier;
    verdict.margin = best_excess;
    verdict.details = best_tag ? *best_tag : "none";
    return verdict;
  }
  verdict.tag = VerdictTag::EvaderWin;
  verdict.margin = std::isfinite(best_excess) ? best_excess : -nearest;
  verdict.details = best_tag ? *best_tag : (nearest_tag ? *nearest_tag : "none");
  return verdict;
}

}  // namespace planeguard
