#include "planeguard/geometry.hpp"

#include <cmath>

namespace planeguard {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroNormal: return "ZeroNormal";
    case ErrorCode::NonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorCode::CoincidentPlayers: return "CoincidentPlayers";
    case ErrorCode::CoincidentPursuers: return "CoincidentPursuers";
    case ErrorCode::DuplicatePlayers: return "DuplicatePlayers";
    case ErrorCode::EmptyPursuerSet: return "EmptyPursuerSet";
    case ErrorCode::NonPositiveExtent: return "NonPositiveExtent";
    case ErrorCode::ResolutionTooLow: return "ResolutionTooLow";
    case ErrorCode::NotBothActive: return "NotBothActive";
    case ErrorCode::CollinearProjections: return "CollinearProjections";
    case ErrorCode::NotCollinearCase: return "NotCollinearCase";
    case ErrorCode::EvaderNotInPlay: return "EvaderNotInPlay";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::NonUnitHeading: return "NonUnitHeading";
    case ErrorCode::NonPositiveDt: return "NonPositiveDt";
    case ErrorCode::TargetNotOnPlane: return "TargetNotOnPlane";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

CanonicalFrame canonical_frame(const TargetPlaneSpec& spec) {
  const Point3& k = spec.normal;
  const double knorm = norm(k);
  if (knorm <= 1e-12)
    fail(ErrorCode::ZeroNormal, "target plane normal has zero length");

  const Point3 w{k.x / knorm, k.y / knorm, k.z / knorm};

  // Build the in-plane axes from the coordinate axis least aligned with w;
  // stays well-conditioned when w is near a coordinate axis. Ties prefer x
  // then y so an already-canonical plane (K along +z) maps via the identity.
  const double ax = std::fabs(w.x), ay = std::fabs(w.y), az = std::fabs(w.z);
  Point3 seed{1.0, 0.0, 0.0};
  if (!(ax <= ay && ax <= az)) {
    if (ay <= az) seed = {0.0, 1.0, 0.0};
    else seed = {0.0, 0.0, 1.0};
  }

  Point3 u = seed - w * dot(seed, w);
  const double ulen = norm(u);
  u = {u.x / ulen, u.y / ulen, u.z / ulen};
  const Point3 v = cross(w, u);

  CanonicalFrame frame;
  frame.rotation = {{{u.x, u.y, u.z}, {v.x, v.y, v.z}, {w.x, w.y, w.z}}};
  frame.translation = w * (spec.offset / knorm);
  return frame;
}

Point3 to_canonical(const CanonicalFrame& f, const Point3& p) {
  const Point3 d = p - f.translation;
  const auto& r = f.rotation;
  return {r[0][0] * d.x + r[0][1] * d.y + r[0][2] * d.z,
          r[1][0] * d.x + r[1][1] * d.y + r[1][2] * d.z,
          r[2][0] * d.x + r[2][1] * d.y + r[2][2] * d.z};
}

Point3 from_canonical(const CanonicalFrame& f, const Point3& p) {
  const auto& r = f.rotation;
  const Point3 d{r[0][0] * p.x + r[1][0] * p.y + r[2][0] * p.z,
                 r[0][1] * p.x + r[1][1] * p.y + r[2][1] * p.z,
                 r[0][2] * p.x + r[1][2] * p.y + r[2][2] * p.z};
  return d + f.translation;
}

}  // namespace planeguard
