#include "planeguard/sweep.hpp"

#include <cinttypes>
#include <cstdio>

#include "planeguard/parallel.hpp"

namespace planeguard {

GameConfig random_config(Rng& rng, int n) {
  std::vector<Point3> pursuers;
  pursuers.reserve(n);
  const Point3 evader{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0),
                      5.0 - 5.0 * rng.next_double()};
  while (int(pursuers.size()) < n) {
    const Point3 p{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0),
                   rng.uniform(-5.0, 5.0)};
    bool clash = dist(p, evader) <= 10.0 * kGeomEps;
    for (const Point3& q : pursuers)
      if (dist(p, q) <= 10.0 * kGeomEps) clash = true;
    if (!clash) pursuers.push_back(p);
  }
  return make_game_config(std::move(pursuers), evader);
}

bool verdict_conflicts_oracle(const Verdict& verdict, const MarginReport& oracle,
                              double band) {
  if (!oracle.resolved) return false;
  if (std::fabs(oracle.supremum) <= band) return false;
  if (verdict.tag == VerdictTag::OnBarrier) return false;
  const bool oracle_evader_win = oracle.supremum > 0.0;
  return oracle_evader_win != (verdict.tag == VerdictTag::EvaderWin);
}

SweepResult run_sweep(const SweepOptions& opts) {
  SweepResult result;
  result.rows.resize(opts.n_configs);

  parallel_for_indexed(std::size_t(opts.n_configs), [&](std::size_t i) {
    Rng rng = Rng::stream(opts.seed, i);
    const std::uint64_t config_seed = rng.next_u64();
    Rng cfg_rng(config_seed);
    const int n = int(cfg_rng.uniform_index(opts.pursuers_min,
                                            opts.pursuers_max));
    const GameConfig config = random_config(cfg_rng, n);

    SweepRow row;
    row.config_seed = config_seed;
    row.n = n;
    row.verdict = classify_initial_state(config);
    row.oracle =
        escape_margin_supremum(*config.evader, config.pursuers, opts.oracle);
    row.agree = !verdict_conflicts_oracle(row.verdict, row.oracle, opts.band);

    if (opts.simulate && row.verdict.tag != VerdictTag::OnBarrier &&
        row.oracle.resolved && std::fabs(row.oracle.supremum) > opts.band) {
      const ValidationReport report = validate_verdict(
          config, row.verdict, row.oracle, opts.trials, opts.dt, config_seed);
      row.sim_pass = report.passed ? 1 : 0;
    }
    result.rows[i] = std::move(row);
  });

  for (const SweepRow& row : result.rows) {
    if (!row.agree) ++result.disagreements;
    if (row.sim_pass == 0) ++result.sim_failures;
  }
  return result;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = "seed,n,verdict,supremum,agree,sim_pass\n";
  char buf[192];
  for (const SweepRow& row : result.rows) {
    std::snprintf(buf, sizeof(buf), "%" PRIu64 ",%d,%s,%.17g,%d,",
                  row.config_seed, row.n, verdict_name(row.verdict.tag),
                  row.oracle.supremum, row.agree ? 1 : 0);
    out += buf;
    out += row.sim_pass < 0 ? "-" : (row.sim_pass ? "1" : "0");
    out += '\n';
  }
  return out;
}

}  // namespace planeguard
