#include "planeguard/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "planeguard/parallel.hpp"
#include "planeguard/rng.hpp"

namespace planeguard {

namespace {

double capture_tolerance(double dt) { return std::max(1e-9, 2.0 * dt); }

void require_unit(const Point3& h) {
  if (std::fabs(norm(h) - 1.0) > 1e-12)
    fail(ErrorCode::NonUnitHeading, "headings must have unit length");
}

// Post-move checks shared by step() and the runners: capture first, then the
// interpolated plane crossing.
void settle_status(SimState& state, const SimState& before, double dt) {
  const double tol = capture_tolerance(dt);
  const double tol2 = tol * tol;
  for (std::size_t k = 0; k < state.pursuers.size(); ++k) {
    if (dist_sq(state.pursuers[k], state.evader) <= tol2) {
      state.status.kind = SimStatus::Captured;
      state.status.time = state.time;
      state.status.pursuer = int(k);
      return;
    }
  }
  if (state.evader.z <= 0.0) {
    const double z0 = before.evader.z;
    const double z1 = state.evader.z;
    const double frac = z0 > z1 ? z0 / (z0 - z1) : 1.0;
    const double tc = before.time + frac * dt;
    const Point3 cross = before.evader +
                         (state.evader - before.evader) * frac;
    double clear2 = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < state.pursuers.size(); ++k) {
      const Point3 pk = before.pursuers[k] +
                        (state.pursuers[k] - before.pursuers[k]) * frac;
      clear2 = std::min(clear2, dist_sq(cross, pk));
    }
    state.status.kind = SimStatus::Escaped;
    state.status.time = tc;
    state.status.crossing = {cross.x, cross.y, 0.0};
    state.status.clearance = std::sqrt(clear2);
  }
}

}  // namespace

SimState step(const SimState& state, const Point3& evader_heading,
              std::span<const Point3> pursuer_headings, double dt) {
  if (!(dt > 0.0)) fail(ErrorCode::NonPositiveDt, "dt must be positive");
  if (pursuer_headings.size() != state.pursuers.size())
    fail(ErrorCode::ParseError, "one heading per pursuer required");
  require_unit(evader_heading);
  for (const Point3& h : pursuer_headings) require_unit(h);

  SimState next = state;
  next.time = state.time + dt;
  next.evader = state.evader + evader_heading * dt;
  for (std::size_t k = 0; k < next.pursuers.size(); ++k)
    next.pursuers[k] = state.pursuers[k] + pursuer_headings[k] * dt;
  settle_status(next, state, dt);
  return next;
}

SimState run_straight_line_escape(const GameConfig& config,
                                  const Point3& target, double dt,
                                  const TrajectorySink& sink) {
  if (!(dt > 0.0)) fail(ErrorCode::NonPositiveDt, "dt must be positive");
  if (!config.evader)
    fail(ErrorCode::EvaderNotInPlay, "escape run needs an evader");
  if (std::fabs(target.z) > kGeomEps)
    fail(ErrorCode::TargetNotOnPlane, "escape target must lie on the plane");

  const Point3 e0 = *config.evader;
  const Point3 d = target - e0;
  const double range = norm(d);
  const Point3 u{d.x / range, d.y / range, d.z / range};

  // Constant-bearing intercept of the straight path, when the closed form
  // admits one: |e0 + T u - p| = T  =>  T = |e0-p|^2 / (-2 u.(e0-p)).
  const std::size_t n = config.pursuers.size();
  std::vector<Point3> fixed_heading(n);
  std::vector<bool> has_intercept(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const Point3 w = e0 - config.pursuers[k];
    const double denom = dot(u, w);
    if (denom < 0.0) {
      const double t_meet = dot(w, w) / (-2.0 * denom);
      const Point3 meet = e0 + u * t_meet;
      const Point3 to_meet = meet - config.pursuers[k];
      const double len = norm(to_meet);
      if (len > kGeomEps) {
        fixed_heading[k] = {to_meet.x / len, to_meet.y / len, to_meet.z / len};
        has_intercept[k] = true;
      }
    }
  }

  SimState state;
  state.pursuers = config.pursuers;
  state.evader = e0;
  if (sink) sink(0.0, state.evader, state.pursuers);

  const double t_max = 10.0 * range;
  std::vector<Point3> headings(n);
  long step_index = 0;
  while (state.status.kind == SimStatus::Running && state.time <= t_max) {
    for (std::size_t k = 0; k < n; ++k) {
      if (has_intercept[k]) {
        headings[k] = fixed_heading[k];
      } else {
        const Point3 to_e = state.evader - state.pursuers[k];
        const double len = norm(to_e);
        headings[k] = len > 1e-12 ? Point3{to_e.x / len, to_e.y / len,
                                           to_e.z / len}
                                  : Point3{0.0, 0.0, 1.0};
      }
    }
    const SimState before = state;
    ++step_index;
    state.time = double(step_index) * dt;
    state.evader = before.evader + u * dt;
    for (std::size_t k = 0; k < n; ++k)
      state.pursuers[k] = before.pursuers[k] + headings[k] * dt;
    settle_status(state, before, dt);
    if (sink) sink(state.time, state.evader, state.pursuers);
  }
  return state;
}

ValidationReport validate_verdict(const GameConfig& config,
                                  const Verdict& verdict,
                                  const MarginReport& oracle, int trials,
                                  double dt, std::uint64_t seed) {
  ValidationReport report;
  report.verdict = verdict;
  report.oracle = oracle;

  if (verdict.tag == VerdictTag::OnBarrier) {
    report.applicable = false;  // measure-zero case, informational only
    return report;
  }
  report.applicable = true;

  if (verdict.tag == VerdictTag::EvaderWin) {
    const SimState end =
        run_straight_line_escape(config, oracle.witness, dt);
    report.trials_run = 1;
    if (end.status.kind == SimStatus::Escaped) {
      report.escapes = 1;
      report.worst_clearance = end.status.clearance;
      report.passed = end.status.clearance > 0.0;
    } else {
      report.captures = end.status.kind == SimStatus::Captured ? 1 : 0;
      report.passed = false;
      report.counterexample = oracle.witness;
    }
    return report;
  }

  // PursuerWin: randomized straight-line attempts must all be intercepted.
  const double extent = auto_extent(*config.evader, config.pursuers);
  const double threshold = 10.0 * dt;
  std::vector<SimState> ends(trials);
  std::vector<Point3> targets(trials);
  {
    Rng rng = Rng::stream(seed, 0x51f0u);
    for (int t = 0; t < trials; ++t)
      targets[t] = Point3{config.evader->x + rng.uniform(-extent, extent),
                          config.evader->y + rng.uniform(-extent, extent),
                          0.0};
  }
  parallel_for_indexed(std::size_t(trials), [&](std::size_t t) {
    ends[t] = run_straight_line_escape(config, targets[t], dt);
  });
  report.trials_run = trials;
  for (int t = 0; t < trials; ++t) {
    const SimState& end = ends[t];
    if (end.status.kind == SimStatus::Captured) {
      ++report.captures;
    } else if (end.status.kind == SimStatus::Escaped) {
      ++report.escapes;
      report.worst_clearance =
          std::max(report.worst_clearance, end.status.clearance);
      if (end.status.clearance > threshold) {
        report.passed = false;
        if (!report.counterexample) report.counterexample = targets[t];
      }
    } else {
      report.passed = false;  // timeout: neither certificate
      if (!report.counterexample) report.counterexample = targets[t];
    }
  }
  return report;
}

ValidationReport validate_verdict(const GameConfig& config, int trials,
                                  double dt, std::uint64_t seed) {
  const Verdict verdict = classify_initial_state(config);
  const MarginReport oracle =
      escape_margin_supremum(*config.evader, config.pursuers);
  return validate_verdict(config, verdict, oracle, trials, dt, seed);
}

}  // namespace planeguard
