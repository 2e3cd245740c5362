#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "planeguard/coalition.hpp"
#include "planeguard/evasion.hpp"
#include "planeguard/geometry.hpp"

namespace planeguard {

struct SimStatus {
  enum Kind { Running, Captured, Escaped } kind = Running;
  double time = 0.0;
  int pursuer = -1;        // Captured: capturing pursuer (0-based)
  Point3 crossing;         // Escaped: interpolated plane crossing
  double clearance = 0.0;  // Escaped: nearest pursuer at the crossing instant
};

struct SimState {
  double time = 0.0;
  std::vector<Point3> pursuers;
  Point3 evader;
  SimStatus status;
};

/// One forward-Euler step with unit headings. Capture is checked before the
/// plane crossing, so a simultaneous capture-and-cross resolves to Captured.
/// Capture tolerance is max(1e-9, 2*dt): two unit-speed players cannot close
/// more than 2*dt within a step, so true contact cannot be skipped over.
SimState step(const SimState& state, const Point3& evader_heading,
              std::span<const Point3> pursuer_headings, double dt);

using TrajectorySink =
    std::function<void(double time, const Point3& evader,
                       std::span<const Point3> pursuers)>;

/// Evader runs straight at `target` (a target-plane point); each pursuer
/// holds the constant-bearing intercept of that straight path when one
/// exists, otherwise chases the evader directly. Stops on capture, escape,
/// or t > 10 * dist(evader, target).
SimState run_straight_line_escape(const GameConfig& config,
                                  const Point3& target, double dt,
                                  const TrajectorySink& sink = nullptr);

struct ValidationReport {
  Verdict verdict;
  MarginReport oracle;
  bool applicable = false;  // false: OnBarrier, informational only
  bool passed = true;
  int trials_run = 0;
  int escapes = 0;
  int captures = 0;
  double worst_clearance = 0.0;          // largest escape clearance seen
  std::optional<Point3> counterexample;  // offending target, if any
};

/// One-sided falsification of a verdict. EvaderWin: the straight run to the
/// oracle witness must escape with positive clearance. PursuerWin: `trials`
/// random plane targets within the oracle extent must yield no escape with
/// clearance above 10*dt.
ValidationReport validate_verdict(const GameConfig& config, int trials,
                                  double dt, std::uint64_t seed);

/// Same, reusing an already-computed verdict and oracle report.
ValidationReport validate_verdict(const GameConfig& config,
                                  const Verdict& verdict,
                                  const MarginReport& oracle, int trials,
                                  double dt, std::uint64_t seed);

}  // namespace planeguard
