// planeguard: winner prediction, barriers, oracle, and simulation for the
// plane-guarding pursuit game. One subcommand per library capability.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "planeguard/config_io.hpp"
#include "planeguard/evasion.hpp"
#include "planeguard/kernels.hpp"
#include "planeguard/mesh.hpp"
#include "planeguard/simulate.hpp"
#include "planeguard/sweep.hpp"

using namespace planeguard;

namespace {

int exit_code_for(const GameError& e) {
  switch (e.code()) {
    case ErrorCode::DegenerateConfiguration:
    case ErrorCode::CoincidentPursuers:
    case ErrorCode::CoincidentPlayers:
      return 3;
    default:
      return 1;
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write file: " + path);
  out << content;
}

int cmd_classify(const std::string& config_path, double band, bool with_oracle,
                 int grid, double extent) {
  const LoadedConfig loaded = load_config(config_path);
  const Verdict verdict = classify_initial_state(loaded.config, band);
  std::printf("verdict: %s\n", verdict_name(verdict.tag));
  std::printf("margin: %.17g\n", verdict.margin);
  std::printf("piece: %s\n", verdict.details.c_str());

  if (!with_oracle) return 0;
  OracleOptions opts;
  opts.grid = grid;
  opts.extent = extent;
  const MarginReport oracle = escape_margin_supremum(
      *loaded.config.evader, loaded.config.pursuers, opts);
  std::printf("oracle_supremum: %.17g\n", oracle.supremum);
  std::printf("oracle_witness: %.17g %.17g %.17g\n", oracle.witness.x,
              oracle.witness.y, oracle.witness.z);
  std::printf("oracle_resolved: %d\n", oracle.resolved ? 1 : 0);
  const bool conflict = verdict_conflicts_oracle(verdict, oracle, 1e-3);
  std::printf("oracle_agrees: %d\n", conflict ? 0 : 1);
  return conflict ? 2 : 0;
}

int cmd_barrier(const std::string& config_path, const std::string& out_json,
                const std::string& out_obj, int resolution,
                const std::string& frame_name) {
  const LoadedConfig loaded = load_config(config_path);
  const auto pieces = multi_barrier(loaded.config);
  const bool raw = frame_name == "raw";
  const BarrierMesh mesh =
      export_mesh(pieces, resolution, raw, raw ? &loaded.frame : nullptr);
  write_file(out_json, mesh_to_json(mesh));
  if (!out_obj.empty()) write_file(out_obj, mesh_to_obj(mesh));
  std::printf("pieces: %zu\n", pieces.size());
  for (const auto& piece : pieces) std::printf("  %s\n", piece.tag.c_str());
  std::printf("vertices: %zu faces: %zu lines: %zu points: %zu\n",
              mesh.vertices.size(), mesh.faces.size(), mesh.lines.size(),
              mesh.points.size());
  return 0;
}

int cmd_oracle(const std::string& config_path, int grid, double extent) {
  const LoadedConfig loaded = load_config(config_path);
  if (!loaded.config.evader)
    fail(ErrorCode::EvaderNotInPlay, "oracle needs an evader in the config");
  OracleOptions opts;
  opts.grid = grid;
  opts.extent = extent;
  const MarginReport report = escape_margin_supremum(
      *loaded.config.evader, loaded.config.pursuers, opts);
  std::printf("supremum: %.17g\n", report.supremum);
  std::printf("witness: %.17g %.17g %.17g\n", report.witness.x,
              report.witness.y, report.witness.z);
  std::printf("resolved: %d\n", report.resolved ? 1 : 0);
  std::printf("kernel: %s\n",
              kernels::backend_name(kernels::active_backend()).c_str());
  return 0;
}

int cmd_simulate(const std::string& config_path, double dt,
                 const std::string& target_str, const std::string& out_csv) {
  const LoadedConfig loaded = load_config(config_path);
  if (!loaded.config.evader)
    fail(ErrorCode::EvaderNotInPlay, "simulate needs an evader in the config");

  Point3 target;
  if (!target_str.empty()) {
    double tx = 0.0, ty = 0.0;
    if (std::sscanf(target_str.c_str(), "%lf,%lf", &tx, &ty) != 2)
      fail(ErrorCode::ParseError, "--target expects x,y");
    target = Point3{tx, ty, 0.0};
  } else {
    target = escape_margin_supremum(*loaded.config.evader,
                                    loaded.config.pursuers)
                 .witness;
  }

  std::string csv = "time,player,x,y,z\n";
  char buf[192];
  TrajectorySink sink = [&](double t, const Point3& e,
                            std::span<const Point3> pursuers) {
    std::snprintf(buf, sizeof(buf), "%.17g,E,%.17g,%.17g,%.17g\n", t, e.x, e.y,
                  e.z);
    csv += buf;
    for (std::size_t k = 0; k < pursuers.size(); ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g,P%zu,%.17g,%.17g,%.17g\n", t,
                    k + 1, pursuers[k].x, pursuers[k].y, pursuers[k].z);
      csv += buf;
    }
  };
  const SimState end = run_straight_line_escape(loaded.config, target, dt, sink);
  write_file(out_csv, csv);

  switch (end.status.kind) {
    case SimStatus::Captured:
      std::printf("outcome: captured t=%.17g pursuer=P%d\n", end.status.time,
                  end.status.pursuer + 1);
      break;
    case SimStatus::Escaped:
      std::printf("outcome: escaped t=%.17g clearance=%.17g\n",
                  end.status.time, end.status.clearance);
      break;
    case SimStatus::Running:
      std::printf("outcome: timeout t=%.17g\n", end.time);
      break;
  }
  return 0;
}

int cmd_sweep(int n_configs, const std::string& pursuer_range,
              std::uint64_t seed, double band, int trials, double dt,
              bool no_sim, const std::string& out_csv) {
  SweepOptions opts;
  opts.n_configs = n_configs;
  opts.seed = seed;
  opts.band = band;
  opts.trials = trials;
  opts.dt = dt;
  opts.simulate = !no_sim;
  if (std::sscanf(pursuer_range.c_str(), "%d..%d", &opts.pursuers_min,
                  &opts.pursuers_max) != 2 ||
      opts.pursuers_min < 1 || opts.pursuers_max < opts.pursuers_min)
    fail(ErrorCode::ParseError, "--pursuers expects A..B with 1 <= A <= B");

  const SweepResult result = run_sweep(opts);
  write_file(out_csv, sweep_csv(result));
  std::printf("configs: %d disagreements: %d sim_failures: %d\n",
              int(result.rows.size()), result.disagreements,
              result.sim_failures);
  return (result.disagreements > 0 || result.sim_failures > 0) ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"barriers and winner prediction for the plane-guarding "
               "pursuit game"};
  app.require_subcommand(1);

  std::string config_path, out_json, out_obj, frame_name = "canonical";
  std::string target_str, out_csv = "report.csv", pursuer_range = "1..3";
  double band = 1e-9, extent = 0.0, dt = 1e-3, sweep_band = 1e-3;
  int grid = 201, resolution = 32, n_configs = 100, trials = 100;
  std::uint64_t seed = 42;
  bool with_oracle = false, no_sim = false;

  auto* classify = app.add_subcommand("classify", "predict the game winner");
  classify->add_option("--config", config_path)->required();
  classify->add_option("--band", band, "barrier tolerance band");
  classify->add_flag("--oracle", with_oracle, "cross-check with the oracle");
  classify->add_option("--grid", grid, "oracle grid resolution");
  classify->add_option("--extent", extent, "oracle extent (0 = auto)");

  auto* barrier = app.add_subcommand("barrier", "export the barrier mesh");
  barrier->add_option("--config", config_path)->required();
  barrier->add_option("--out", out_json, "mesh JSON path")->required();
  barrier->add_option("--obj", out_obj, "also write an OBJ file");
  barrier->add_option("--resolution", resolution, "samples per piece side");
  barrier->add_option("--frame", frame_name)
      ->check(CLI::IsMember({"raw", "canonical"}));

  auto* oracle = app.add_subcommand("oracle", "numeric escape-margin supremum");
  oracle->add_option("--config", config_path)->required();
  oracle->add_option("--grid", grid, "grid resolution");
  oracle->add_option("--extent", extent, "search half-width (0 = auto)");

  auto* simulate = app.add_subcommand("simulate", "straight-line escape run");
  simulate->add_option("--config", config_path)->required();
  simulate->add_option("--dt", dt, "time step")->required();
  simulate->add_option("--target", target_str, "plane target x,y "
                       "(default: oracle witness)");
  simulate->add_option("--out", out_csv, "trajectory CSV path")->required();

  auto* sweep = app.add_subcommand("sweep", "randomized validation sweep");
  sweep->add_option("--n", n_configs, "number of configurations");
  sweep->add_option("--pursuers", pursuer_range, "pursuer count range A..B");
  sweep->add_option("--seed", seed, "base seed");
  sweep->add_option("--band", sweep_band, "oracle agreement band");
  sweep->add_option("--trials", trials, "escape attempts per PursuerWin row");
  sweep->add_option("--dt", dt, "simulation step");
  sweep->add_flag("--no-sim", no_sim, "skip simulation validation");
  sweep->add_option("--out", out_csv, "report CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed())
      return cmd_classify(config_path, band, with_oracle, grid, extent);
    if (barrier->parsed())
      return cmd_barrier(config_path, out_json, out_obj, resolution,
                         frame_name);
    if (oracle->parsed()) return cmd_oracle(config_path, grid, extent);
    if (simulate->parsed())
      return cmd_simulate(config_path, dt, target_str, out_csv);
    if (sweep->parsed())
      return cmd_sweep(n_configs, pursuer_range, seed, sweep_band, trials, dt,
                       no_sim, out_csv);
  } catch (const GameError& e) {
    std::fprintf(stderr, "error [%s]: %s\n", error_code_name(e.code()),
                 e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
