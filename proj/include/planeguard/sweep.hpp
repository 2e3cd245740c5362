#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planeguard/coalition.hpp"
#include "planeguard/evasion.hpp"
#include "planeguard/rng.hpp"
#include "planeguard/simulate.hpp"

namespace planeguard {

struct SweepOptions {
  int n_configs = 100;
  int pursuers_min = 1;
  int pursuers_max = 3;
  std::uint64_t seed = 42;
  double band = 1e-3;      // oracle sign band: |supremum| inside is undecided
  int trials = 100;        // straight-line attempts per PursuerWin config
  double dt = 1e-3;
  bool simulate = true;
  OracleOptions oracle;
};

struct SweepRow {
  std::uint64_t config_seed = 0;
  int n = 0;
  Verdict verdict;
  MarginReport oracle;
  bool agree = true;
  int sim_pass = -1;  // 1 pass, 0 fail, -1 not applicable / skipped
};

struct SweepResult {
  std::vector<SweepRow> rows;
  int disagreements = 0;
  int sim_failures = 0;
};

/// Random game in the canonical frame: n pursuers in [-5,5]^3, evader in
/// [-5,5]^2 x (0,5].
GameConfig random_config(Rng& rng, int n);

/// Verdict vs oracle vs simulation over randomized configurations. Rows are
/// ordered by index and the per-config RNG stream depends only on
/// (seed, index), so output is reproducible regardless of scheduling.
SweepResult run_sweep(const SweepOptions& opts);

std::string sweep_csv(const SweepResult& result);

/// True when the verdict tag contradicts the oracle sign outside the band
/// (only meaningful for resolved reports).
bool verdict_conflicts_oracle(const Verdict& verdict, const MarginReport& oracle,
                              double band);

}  // namespace planeguard
