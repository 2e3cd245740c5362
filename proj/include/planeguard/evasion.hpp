#pragma once

#include <span>
#include <vector>

#include "planeguard/geometry.hpp"

namespace planeguard {

/// Perpendicular bisector of the evader-pursuer segment, normal pointing from
/// evader to pursuer. Points with normal.q < offset are strictly closer to
/// the evader.
struct BisectorPlane {
  Point3 normal;
  double offset = 0.0;
};

BisectorPlane bisector_plane(const Point3& evader, const Point3& pursuer);

/// min over pursuers of dist(t, p) minus dist(t, evader). Positive means the
/// evader reaches t strictly first.
double escape_margin(const Point3& t, const Point3& evader,
                     std::span<const Point3> pursuers);

struct MarginReport {
  double supremum = 0.0;
  Point3 witness;        // on the target plane, z = 0
  bool resolved = false; // false: best value still improving toward the edge
                         // of the search region (supremum approached at
                         // infinity or beyond the extent)
};

struct OracleOptions {
  int grid = 201;          // samples per grid side (forced odd, >= 9)
  double extent = 0.0;     // half-width of the coarse square; 0 selects
                           // 10 * (max pursuer distance to evader + 1),
                           // negative values are rejected
  int levels = 7;          // zoom levels, extent shrinking 10x per level
  int extra_seeds = 3;     // additional zoom chains at coarse local maxima
  bool polygon_seed = true;  // extra chain at the deepest interior point of
                             // the bisector half-plane intersection
};

/// Grid search plus local zoom for the best escape margin over the target
/// plane. Deliberately independent of the closed-form barrier construction:
/// every reported value is an exactly evaluated margin, so the result can
/// only under-estimate the true supremum, never exceed it.
///
/// Deterministic: fixed evaluation order, ties broken toward the
/// lexicographically smallest witness (x, then y).
MarginReport escape_margin_supremum(const Point3& evader,
                                    std::span<const Point3> pursuers,
                                    const OracleOptions& opts = {});

double auto_extent(const Point3& evader, std::span<const Point3> pursuers);

}  // namespace planeguard
