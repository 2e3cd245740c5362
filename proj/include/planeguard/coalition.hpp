#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "planeguard/geometry.hpp"
#include "planeguard/pieces.hpp"

namespace planeguard {

struct GameConfig {
  std::vector<Point3> pursuers;   // canonical frame
  std::optional<Point3> evader;   // canonical frame, z > 0 when present
};

/// Validates pairwise-distinct positions and the evader's play-side start.
GameConfig make_game_config(std::vector<Point3> pursuers,
                            std::optional<Point3> evader);

/// Indices (0-based, ascending) of pursuers owning some target-plane point
/// they reach strictly before every other pursuer. Pairwise arrival
/// comparisons are linear in the plane point, so each cell is an open
/// half-plane intersection tested exactly by LP rather than by sampling.
std::vector<int> active_pursuers(std::span<const Point3> pursuers);

struct CoalitionSet {
  std::vector<int> active;
  std::vector<std::array<int, 3>> triples;  // cap coalitions
  std::vector<std::array<int, 2>> pairs;    // arc coalitions
  std::vector<int> singles;
};

/// Active coalition structure: triples whose equal-distance point is won
/// strictly against every other active pursuer; all-collinear actives fall
/// back to consecutive pairs along the common line; fewer than three actives
/// go to pairs/singles.
CoalitionSet active_triples(std::span<const Point3> pursuers,
                            const std::vector<int>& active);

/// Barrier pieces for the coalition structure; tags carry 1-based pursuer
/// indices.
std::vector<BarrierPiece> coalition_pieces(std::span<const Point3> pursuers,
                                           const CoalitionSet& coalitions);

/// Full pipeline: actives, coalitions, deduped piece union, shared-edge
/// consistency assertion.
std::vector<BarrierPiece> multi_barrier(const GameConfig& config);

enum class VerdictTag { PursuerWin, EvaderWin, OnBarrier };

struct Verdict {
  VerdictTag tag = VerdictTag::EvaderWin;
  double margin = 0.0;   // radial excess on the governing piece; positive on
                         // the pursuer-win side (opposite sign to the oracle)
  std::string details;   // governing piece tag, or "none"
};

/// Winner prediction from the initial state. `band` is the absolute
/// tolerance around the measure-zero barrier inside which the verdict is
/// reported as OnBarrier.
Verdict classify_initial_state(const GameConfig& config, double band = 1e-9);

const char* verdict_name(VerdictTag tag);

}  // namespace planeguard
