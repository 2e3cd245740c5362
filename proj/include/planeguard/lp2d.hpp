#pragma once

#include <span>
#include <vector>

namespace planeguard {

/// Closed half-plane a*x + b*y <= c.
struct HalfPlane {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

struct ChebyshevResult {
  bool found = false;   // some vertex satisfied every constraint
  double slack = 0.0;   // max over (x,y) of min_i (c_i - a_i x - b_i y)/|n_i|
  double x = 0.0;
  double y = 0.0;
};

/// Deepest interior point of the intersection of half-planes, restricted to
/// the box [-box_radius, box_radius]^2. slack > 0 means the open intersection
/// has an interior point inside the box; slack <= 0 means it does not.
///
/// Solved exactly as a 3-variable LP (x, y, slack) by enumerating all triples
/// of active constraints — deterministic, no pivoting, fine for the dozen or
/// so constraints we ever see.
ChebyshevResult chebyshev_center(std::span<const HalfPlane> planes,
                                 double box_radius);

}  // namespace planeguard
