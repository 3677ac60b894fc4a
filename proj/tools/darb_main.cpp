// darb: experiment runner for the random-beamforming simulator.
//
//   darb <fig2|fig3|fig4|optimize|sweep> [options]
//
// Emits deterministic CSV; rerunning with the same seed and configuration
// produces byte-identical files. Exit codes: 0 success/converged, 1 optimizer
// did not converge within the iteration cap, 2 infeasible problem, 3 bad
// usage or I/O failure.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "darb/experiments.hpp"
#include "darb/units.hpp"
#include "darb/version.hpp"

namespace {

struct CliArgs {
  std::string config_path;
  std::uint64_t seed = 12345;
  int trials = 0;  // 0 keeps the experiment default
  std::string out_path;
  std::string phi = "phase-dft";
  std::string c_variant = "corrected";
  double tfs_alpha = 0.1;
  double beta_ref_dist = 30.0;
  bool oracle = false;
  int threads = 1;
  std::string geometry = "corner";
  std::vector<int> k_list;
  std::vector<int> l_list;
  double p_t_dbw = -1e9;  // sentinel: keep config value
  int fig4_l = 4;
  double fig4_snr_db = 0.0;
  bool fig4_absolute = false;
  std::string layout_in;
  std::string layout_dump;
  std::string trial_trace;
};

void add_common(CLI::App* cmd, CliArgs& args) {
  cmd->add_option("--config", args.config_path, "JSON config file (flat key/value)");
  cmd->add_option("--seed", args.seed, "root RNG seed");
  cmd->add_option("--trials", args.trials, "Monte Carlo trials per point");
  cmd->add_option("--out", args.out_path, "output CSV path");
  cmd->add_option("--phi", args.phi, "beam construction: haar|phase-dft")
      ->check(CLI::IsMember({"haar", "phase-dft"}));
  cmd->add_option("--c-variant", args.c_variant, "power subproblem constant: paper|corrected")
      ->check(CLI::IsMember({"paper", "corrected"}));
  cmd->add_option("--tfs-alpha", args.tfs_alpha, "threshold feedback SINR cutoff");
  cmd->add_option("--beta-ref-dist", args.beta_ref_dist,
                  "reference distance [m] for the optimizer's scalar gain");
  cmd->add_flag("--oracle", args.oracle, "also run the exhaustive grid reference");
  cmd->add_option("--threads", args.threads, "worker threads for Monte Carlo trials");
  cmd->add_option("--geometry", args.geometry, "transmitter placement: corner|center")
      ->check(CLI::IsMember({"corner", "center"}));
  cmd->add_option("--k-list", args.k_list, "user counts to sweep")->delimiter(',');
  cmd->add_option("--l-list", args.l_list, "beam counts to sweep")->delimiter(',');
  cmd->add_option("--p-t-dbw", args.p_t_dbw, "override transmit power [dBW]");
  cmd->add_option("--layout", args.layout_in, "load user layout from CSV");
  cmd->add_option("--dump-layout", args.layout_dump, "write the user layout CSV");
}

darb::ExperimentSpec build_spec(const std::string& name, const CliArgs& args) {
  darb::ExperimentSpec spec;
  spec.name = name;
  if (!args.config_path.empty()) darb::load_config_file(args.config_path, spec.cfg, spec.pm);
  if (args.p_t_dbw > -1e8) spec.cfg.p_t = darb::dbw_to_watts(args.p_t_dbw);
  spec.seed = darb::Seed{args.seed, 0};
  if (args.trials > 0) spec.trials = args.trials;
  spec.out_path = args.out_path;
  spec.method = darb::parse_beam_method(args.phi);
  spec.c_variant = darb::parse_c_variant(args.c_variant);
  spec.tfs_alpha = args.tfs_alpha;
  spec.beta_ref_dist_m = args.beta_ref_dist;
  spec.oracle = args.oracle;
  spec.threads = args.threads;
  spec.geometry =
      args.geometry == "corner" ? darb::Geometry::kCornerOrigin : darb::Geometry::kCenterOrigin;
  if (!args.k_list.empty()) spec.k_sweep = args.k_list;
  if (!args.l_list.empty()) spec.l_list = args.l_list;
  spec.fig4_l_beams = args.fig4_l;
  spec.fig4_snr_db = args.fig4_snr_db;
  spec.fig4_normalized = !args.fig4_absolute;
  spec.layout_in = args.layout_in;
  spec.layout_dump = args.layout_dump;
  spec.trial_trace = args.trial_trace;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random-beamforming simulator and energy-efficiency optimizer"};
  app.set_version_flag("--version", std::string("darb ") + darb::kVersion);
  app.require_subcommand(1);

  CliArgs args;
  CLI::App* fig2 = app.add_subcommand("fig2", "EE vs K for surface-assisted and multi-antenna");
  CLI::App* fig3 = app.add_subcommand("fig3", "EE vs K: fixed, jointly optimized, multi-antenna");
  CLI::App* fig4 = app.add_subcommand("fig4", "rate and feedback overhead with/without threshold");
  CLI::App* optimize = app.add_subcommand("optimize", "alternating optimization of (L, P_T)");
  CLI::App* sweep = app.add_subcommand("sweep", "generic EE grid over K and L");
  for (CLI::App* cmd : {fig2, fig3, fig4, optimize, sweep}) add_common(cmd, args);
  fig4->add_option("--fig4-l", args.fig4_l, "beam count for the overhead study");
  fig4->add_option("--snr-db", args.fig4_snr_db, "normalized SNR [dB] for the overhead study");
  fig4->add_flag("--absolute", args.fig4_absolute,
                 "use the configured powers and user geometry instead of a beta=1 link");
  fig4->add_option("--trial-trace", args.trial_trace, "per-trial trace CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    const darb::ExperimentSpec spec = build_spec(name, args);

    if (name == "fig2") {
      const auto rows = run_fig2(spec);
      std::printf("fig2: %zu rows%s%s\n", rows.size(),
                  spec.out_path.empty() ? "" : " -> ", spec.out_path.c_str());
    } else if (name == "fig3") {
      const auto rows = run_fig3(spec);
      std::printf("fig3: %zu rows%s%s\n", rows.size(),
                  spec.out_path.empty() ? "" : " -> ", spec.out_path.c_str());
    } else if (name == "fig4") {
      const auto rows = run_fig4(spec);
      std::printf("fig4: %zu rows%s%s\n", rows.size(),
                  spec.out_path.empty() ? "" : " -> ", spec.out_path.c_str());
    } else if (name == "sweep") {
      const auto rows = run_sweep(spec);
      std::printf("sweep: %zu rows%s%s\n", rows.size(),
                  spec.out_path.empty() ? "" : " -> ", spec.out_path.c_str());
    } else {
      const darb::OptimizeRun run = run_optimize(spec);
      std::printf("optimize: L*=%d P_T=%.6g W (%.4f dBW) EE=%.6g bits/s/Hz/W"
                  " mc_ee=%.6g bits/J iterations=%d converged=%d\n",
                  run.result.l_beams, run.result.p_t, darb::watts_to_dbw(run.result.p_t),
                  run.result.ee, run.ee_mc_bits_per_j, run.result.iterations,
                  run.result.converged ? 1 : 0);
      if (run.oracle) {
        std::printf("oracle:   L*=%d P_T=%.6g W EE=%.6g gap=%.3g\n", run.oracle->l_beams,
                    run.oracle->p_t, run.oracle->ee, run.oracle->ee - run.result.ee);
      }
      if (!run.result.converged) return 1;
    }
  } catch (const darb::InfeasibleError& e) {
    std::fprintf(stderr, "infeasible: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
