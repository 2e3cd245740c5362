#pragma once

#include <vector>

#include "planeguard/geometry.hpp"
#include "planeguard/pieces.hpp"

namespace planeguard {

enum class PairTag { BothActive, SingleActive, EmptyBarrier };

struct PairClass {
  PairTag tag = PairTag::BothActive;
  int index = -1;  // SingleActive: 0 for the first argument, 1 for the second
};

/// Both pursuers shape the pair barrier iff their projections differ. With
/// equal projections the one nearer the plane rules alone, and a mirrored
/// pair (z_i == -z_j) cancels to an empty barrier.
PairClass classify_pair(const Point3& p_i, const Point3& p_j);

/// Point of the target plane on the projection line that both pursuers reach
/// at the same time. Requires BothActive.
Point3 equal_time_point(const Point3& p_i, const Point3& p_j);

/// Barrier of an active pair: mirror points of below-plane pursuers plus the
/// circle segment between the lifted projections. Requires BothActive.
std::vector<BarrierPiece> pair_barrier(const Point3& p_i, const Point3& p_j);

/// Pursuer-win membership: q in the vertical strip over the projection
/// segment (closed beta range) and strictly outside the barrier circle.
/// Throws EvaderNotInPlay for q.z <= 0 and NotBothActive for degenerate pairs.
bool pair_pursuer_region_contains(const Point3& p_i, const Point3& p_j,
                                  const Point3& q);

/// Same membership test but false (instead of throwing) when q.z <= 0;
/// used by the three-pursuer classifier on mirrored candidate points.
bool pair_region_contains_lenient(const Point3& p_i, const Point3& p_j,
                                  const Point3& q);

/// Arc builder shared with the coalition engine (tag filled by caller).
ArcPiece make_pair_arc(const Point3& p_i, const Point3& p_j);

}  // namespace planeguard
