#pragma once

#include <optional>
#include <string>
#include <vector>

#include "darb/channel.hpp"
#include "darb/config_io.hpp"
#include "darb/montecarlo.hpp"
#include "darb/optimizer.hpp"

namespace darb {

// One experiment run: which study, the system/power configuration, the sweep
// grids, and reproducibility knobs. CSV outputs are byte-identical for
// identical specs.
struct ExperimentSpec {
  std::string name;  // fig2 | fig3 | fig4 | optimize | sweep
  SystemConfig cfg;
  PowerModel pm;
  std::vector<int> k_sweep = {10, 20, 40, 60, 80, 100};
  std::vector<int> l_list = {8, 18};
  int trials = 2000;
  Seed seed{12345, 0};
  std::string out_path;

  BeamMethod method = BeamMethod::kPhaseDft;
  double tfs_alpha = 0.1;
  double beta_ref_dist_m = 30.0;  // scalar gain reference distance for the optimizer
  CVariant c_variant = CVariant::kCorrected;
  bool oracle = false;
  int threads = 1;
  Geometry geometry = Geometry::kCornerOrigin;

  // Rate/overhead study defaults: a small beam count and a normalized
  // (beta = 1) link at the given SNR, where the threshold actually bites.
  int fig4_l_beams = 4;
  bool fig4_normalized = true;
  double fig4_snr_db = 0.0;

  std::string layout_in;     // load layout CSV instead of placing users
  std::string layout_dump;   // write the layout used
  std::string trial_trace;   // per-trial trace CSV (fig4 threshold run)

  void validate() const;
};

struct Fig2Row {
  int k = 0;
  std::string system;  // "ris" | "ma"
  int l_or_m = 0;
  double rate_bps_hz = 0.0;
  double rate_stderr_bps_hz = 0.0;
  double ee_bits_per_j = 0.0;
  double ee_stderr_bits_per_j = 0.0;
};

struct Fig3Row {
  int k = 0;
  std::string curve;  // "darb_fixed" | "jeta" | "ma"
  int l = 0;
  double p_t_w = 0.0;
  double rate_bps_hz = 0.0;
  double rate_stderr_bps_hz = 0.0;
  double ee_bits_per_j = 0.0;
  double ee_stderr_bits_per_j = 0.0;
  double ee_model_bps_hz_per_w = 0.0;  // large-K model at the scalar gain
};

struct Fig4Row {
  int k = 0;
  double rate_no_tfs_bps_hz = 0.0;
  double rate_no_tfs_stderr_bps_hz = 0.0;
  double rate_tfs_bps_hz = 0.0;
  double rate_tfs_stderr_bps_hz = 0.0;
  double fo_no_tfs_bits = 0.0;
  double fo_tfs_bits = 0.0;
  double fo_tfs_bits_stderr = 0.0;
};

struct SweepRow {
  int k = 0;
  int l = 0;
  double p_t_w = 0.0;
  double rate_bps_hz = 0.0;
  double rate_stderr_bps_hz = 0.0;
  double ee_ris_bits_per_j = 0.0;
  double ee_ma_bits_per_j = 0.0;
};

struct OptimizeRun {
  OptimizationResult result;
  std::optional<GridOptimum> oracle;
  double ee_mc_bits_per_j = 0.0;  // measured EE at the returned optimum
};

std::vector<Fig2Row> run_fig2(const ExperimentSpec& spec);
std::vector<Fig3Row> run_fig3(const ExperimentSpec& spec);
std::vector<Fig4Row> run_fig4(const ExperimentSpec& spec);
OptimizeRun run_optimize(const ExperimentSpec& spec);
std::vector<SweepRow> run_sweep(const ExperimentSpec& spec);

// First k users of a layout (layouts are prefix-stable in the seed).
UserLayout layout_prefix(const UserLayout& layout, int k_users);

}  // namespace darb
