#pragma once

#include <vector>

#include "planeguard/geometry.hpp"
#include "planeguard/pair_barrier.hpp"
#include "planeguard/pieces.hpp"

namespace planeguard {

/// Single-pursuer barrier: the mirror point for a below-plane pursuer,
/// otherwise empty.
BarrierPiece single_barrier(const Point3& p);

/// Pursuer-win ray above the mirror point: same projection, z > |p.z|.
bool single_pursuer_region_contains(const Point3& p, const Point3& q);

enum class TripleTag { One, Two, Three, ThreeCollinear };

struct TripleClass {
  TripleTag tag = TripleTag::Three;
  int i = -1;  // One: ruling pursuer; Two: first of the pair;
               // ThreeCollinear: middle pursuer
  int j = -1;  // Two: second of the pair
};

/// Which pursuers the three-pursuer barrier depends on. Indices are 0-based
/// argument positions. Throws DegenerateConfiguration when no branch holds
/// within tolerance.
TripleClass classify_triple(const Point3& p1, const Point3& p2,
                            const Point3& p3);

/// Target-plane point equidistant to all three pursuers (2x2 linear solve).
/// Requires noncollinear projections.
Point3 equidistant_point(const Point3& p1, const Point3& p2, const Point3& p3);

/// Spherical-cap barrier for three active pursuers with noncollinear
/// projections.
CapPiece triple_barrier_noncollinear(const Point3& p1, const Point3& p2,
                                     const Point3& p3);

/// Collinear-projection barrier: union of the two middle-outer pair barriers.
/// `middle` is the 0-based argument index whose projection sits between the
/// others.
std::vector<BarrierPiece> triple_barrier_collinear(const Point3& p1,
                                                   const Point3& p2,
                                                   const Point3& p3,
                                                   int middle);

/// Pursuer-win membership for the Three / ThreeCollinear classes.
bool triple_pursuer_region_contains(const Point3& p1, const Point3& p2,
                                    const Point3& p3, const Point3& q);

/// Membership dispatched over every class (One -> ray, Two -> pair strip,
/// otherwise the three-pursuer regions); used for cross-checks.
bool triple_region_contains_any(const Point3& p1, const Point3& p2,
                                const Point3& p3, const Point3& q);

}  // namespace planeguard
