#include "darb/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "darb/csv.hpp"
#include "darb/units.hpp"
#include "darb/version.hpp"

namespace darb {

namespace {

std::string provenance(const ExperimentSpec& spec) {
  const std::string cfg_json = canonical_config_json(spec.cfg, spec.pm);
  std::string line = "darb " + std::string(kVersion) + " experiment=" + spec.name +
                     " seed=" + format_int(static_cast<long long>(spec.seed.root)) + "/" +
                     format_int(static_cast<long long>(spec.seed.stream)) +
                     " trials=" + format_int(spec.trials) +
                     " config_hash=" + hex16(fnv1a64(cfg_json));
  return line;
}

UserLayout experiment_layout(const ExperimentSpec& spec, int k_users) {
  UserLayout layout;
  if (!spec.layout_in.empty()) {
    layout = read_layout_csv_file(spec.layout_in);
    if (layout.size() < k_users)
      throw std::runtime_error("loaded layout has fewer users than the sweep needs");
  } else {
    layout = place_users(spec.seed, k_users, spec.cfg.area_side_m, spec.geometry);
  }
  if (!spec.layout_dump.empty()) write_layout_csv_file(spec.layout_dump, layout);
  return layout;
}

int max_of(const std::vector<int>& v) { return *std::max_element(v.begin(), v.end()); }

EeProblem make_problem(const ExperimentSpec& spec, int k_users) {
  EeProblem prob;
  prob.pm = spec.pm;
  prob.k_users = k_users;
  prob.beta = path_loss(spec.beta_ref_dist_m);
  prob.sigma2 = spec.cfg.sigma2;
  prob.l_max = spec.cfg.l_max;
  prob.p_max = spec.cfg.p_max;
  return prob;
}

// Large-K model rate (clamped at zero) for an (L, p) point, in bits/s/Hz.
double model_rate(const EeProblem& prob, int l, double p) {
  const double log_k = prob.inner_log == InnerLog::kNatural
                           ? std::log(static_cast<double>(prob.k_users))
                           : std::log2(static_cast<double>(prob.k_users));
  const double ld = static_cast<double>(l);
  const double rate = ld * std::log2(prob.beta * log_k) + ld * std::log2(p / (ld * prob.sigma2));
  return std::max(rate, 0.0);
}

}  // namespace

void ExperimentSpec::validate() const {
  cfg.validate();
  pm.validate();
  if (name != "fig2" && name != "fig3" && name != "fig4" && name != "optimize" && name != "sweep")
    throw std::invalid_argument("unknown experiment: " + name);
  if (k_sweep.empty()) throw std::invalid_argument("experiment: k_sweep must be nonempty");
  if (l_list.empty()) throw std::invalid_argument("experiment: l_list must be nonempty");
  for (int k : k_sweep)
    if (k < 1) throw std::invalid_argument("experiment: k_sweep entries must be >= 1");
  for (int l : l_list)
    if (l < 1 || l > cfg.l_max)
      throw std::invalid_argument("experiment: l_list entries must lie in [1, l_max]");
  if (trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
  if (tfs_alpha < 0) throw std::invalid_argument("experiment: tfs-alpha must be >= 0");
  if (!(beta_ref_dist_m > 0)) throw std::invalid_argument("experiment: beta-ref-dist must be > 0");
  if (fig4_l_beams < 1 || fig4_l_beams > cfg.l_max)
    throw std::invalid_argument("experiment: fig4 l_beams must lie in [1, l_max]");
}

UserLayout layout_prefix(const UserLayout& layout, int k_users) {
  if (k_users > layout.size()) throw std::invalid_argument("layout_prefix: not enough users");
  UserLayout out;
  out.positions_m.assign(layout.positions_m.begin(), layout.positions_m.begin() + k_users);
  out.distances_m.assign(layout.distances_m.begin(), layout.distances_m.begin() + k_users);
  out.betas.assign(layout.betas.begin(), layout.betas.begin() + k_users);
  return out;
}

std::vector<Fig2Row> run_fig2(const ExperimentSpec& spec) {
  spec.validate();
  const UserLayout base = experiment_layout(spec, max_of(spec.k_sweep));

  std::vector<Fig2Row> rows;
  for (int k : spec.k_sweep) {
    const UserLayout layout = layout_prefix(base, k);
    for (int l : spec.l_list) {
      SystemConfig cfg = spec.cfg;
      cfg.k_users = k;
      cfg.l_beams = l;
      McOptions opts;
      opts.seed = spec.seed;
      opts.trials = spec.trials;
      opts.mode = McMode::kFullFeedback;
      opts.method = spec.method;
      opts.threads = spec.threads;
      const McResult mc = monte_carlo_sum_rate(cfg, layout, opts);
      const double rate_bps = cfg.bandwidth_hz * mc.rate.mean_bps_hz;
      const double se_bps = cfg.bandwidth_hz * mc.rate.stderr_bps_hz;

      const double p_ris = total_power_ris(spec.pm, cfg);
      rows.push_back({k, "ris", l, mc.rate.mean_bps_hz, mc.rate.stderr_bps_hz,
                      energy_efficiency(rate_bps, p_ris), se_bps / p_ris});
      const double p_ma = total_power_ma(spec.pm, cfg, l);
      rows.push_back({k, "ma", l, mc.rate.mean_bps_hz, mc.rate.stderr_bps_hz,
                      energy_efficiency(rate_bps, p_ma), se_bps / p_ma});
    }
  }

  if (!spec.out_path.empty()) {
    CsvWriter csv(spec.out_path);
    csv.comment(provenance(spec));
    csv.header({"k", "system", "l_or_m", "rate_bps_hz", "rate_stderr_bps_hz", "ee_bits_per_j",
                "ee_stderr_bits_per_j"});
    for (const auto& r : rows) {
      csv.row({format_int(r.k), r.system, format_int(r.l_or_m), format_double(r.rate_bps_hz),
               format_double(r.rate_stderr_bps_hz), format_double(r.ee_bits_per_j),
               format_double(r.ee_stderr_bits_per_j)});
    }
  }
  return rows;
}

std::vector<Fig3Row> run_fig3(const ExperimentSpec& spec) {
  spec.validate();
  const UserLayout base = experiment_layout(spec, max_of(spec.k_sweep));

  OptimizerConfig opt;
  opt.epsilon = spec.cfg.epsilon;
  opt.c_variant = spec.c_variant;

  std::vector<Fig3Row> rows;
  for (int k : spec.k_sweep) {
    const UserLayout layout = layout_prefix(base, k);
    const EeProblem prob = make_problem(spec, k);

    auto evaluate = [&](const std::string& curve, int l, double p, bool multi_antenna) {
      SystemConfig cfg = spec.cfg;
      cfg.k_users = k;
      cfg.l_beams = l;
      cfg.p_t = p;
      McOptions opts;
      opts.seed = spec.seed;
      opts.trials = spec.trials;
      opts.mode = McMode::kFullFeedback;
      opts.method = spec.method;
      opts.threads = spec.threads;
      const McResult mc = monte_carlo_sum_rate(cfg, layout, opts);
      const double rate_bps = cfg.bandwidth_hz * mc.rate.mean_bps_hz;
      const double se_bps = cfg.bandwidth_hz * mc.rate.stderr_bps_hz;
      const double power =
          multi_antenna ? total_power_ma(spec.pm, cfg, l) : total_power_ris(spec.pm, cfg);
      Fig3Row row;
      row.k = k;
      row.curve = curve;
      row.l = l;
      row.p_t_w = p;
      row.rate_bps_hz = mc.rate.mean_bps_hz;
      row.rate_stderr_bps_hz = mc.rate.stderr_bps_hz;
      row.ee_bits_per_j = energy_efficiency(rate_bps, power);
      row.ee_stderr_bits_per_j = se_bps / power;
      row.ee_model_bps_hz_per_w = model_rate(prob, l, p) / power;
      rows.push_back(row);
    };

    evaluate("darb_fixed", spec.cfg.l_beams, spec.cfg.p_t, false);

    const OptimizationResult jeta = alternating_optimize(prob, opt);
    evaluate("jeta", jeta.l_beams, jeta.p_t, false);

    evaluate("ma", spec.cfg.l_beams, spec.cfg.p_t, true);
  }

  if (!spec.out_path.empty()) {
    CsvWriter csv(spec.out_path);
    csv.comment(provenance(spec));
    csv.header({"k", "curve", "l", "p_t_w", "p_t_dbw", "rate_bps_hz", "rate_stderr_bps_hz",
                "ee_bits_per_j", "ee_stderr_bits_per_j", "ee_model_bps_hz_per_w"});
    for (const auto& r : rows) {
      csv.row({format_int(r.k), r.curve, format_int(r.l), format_double(r.p_t_w),
               format_double(watts_to_dbw(r.p_t_w)), format_double(r.rate_bps_hz),
               format_double(r.rate_stderr_bps_hz), format_double(r.ee_bits_per_j),
               format_double(r.ee_stderr_bits_per_j), format_double(r.ee_model_bps_hz_per_w)});
    }
  }
  return rows;
}

std::vector<Fig4Row> run_fig4(const ExperimentSpec& spec) {
  spec.validate();

  SystemConfig cfg4 = spec.cfg;
  cfg4.l_beams = spec.fig4_l_beams;
  cfg4.alpha = spec.tfs_alpha;
  if (spec.fig4_normalized) {
    // beta = 1 link at the configured SNR: p_t / sigma2 = 10^(snr_db / 10).
    cfg4.sigma2 = 1.0;
    cfg4.p_t = db_to_linear(spec.fig4_snr_db);
    cfg4.p_max = std::max(cfg4.p_max, cfg4.p_t);
  }

  UserLayout base;
  if (spec.fig4_normalized) {
    base = unit_gain_layout(max_of(spec.k_sweep));
  } else {
    base = experiment_layout(spec, max_of(spec.k_sweep));
  }

  std::vector<Fig4Row> rows;
  for (int k : spec.k_sweep) {
    const UserLayout layout = layout_prefix(base, k);
    SystemConfig cfg = cfg4;
    cfg.k_users = k;

    McOptions opts;
    opts.seed = spec.seed;
    opts.trials = spec.trials;
    opts.method = spec.method;
    opts.threads = spec.threads;

    opts.mode = McMode::kFullFeedback;
    const McResult full = monte_carlo_sum_rate(cfg, layout, opts);
    opts.mode = McMode::kThresholdFeedback;
    const McResult tfs = monte_carlo_sum_rate(cfg, layout, opts);

    Fig4Row row;
    row.k = k;
    row.rate_no_tfs_bps_hz = full.rate.mean_bps_hz;
    row.rate_no_tfs_stderr_bps_hz = full.rate.stderr_bps_hz;
    row.rate_tfs_bps_hz = tfs.rate.mean_bps_hz;
    row.rate_tfs_stderr_bps_hz = tfs.rate.stderr_bps_hz;
    row.fo_no_tfs_bits = full.feedback_bits_mean;
    row.fo_tfs_bits = tfs.feedback_bits_mean;
    row.fo_tfs_bits_stderr = tfs.feedback_bits_stderr;
    rows.push_back(row);
  }

  if (!spec.trial_trace.empty()) {
    // Per-trial trace of the threshold run at the largest K.
    const int k = max_of(spec.k_sweep);
    SystemConfig cfg = cfg4;
    cfg.k_users = k;
    const UserLayout layout = layout_prefix(base, k);
    CsvWriter csv(spec.trial_trace);
    csv.comment(provenance(spec));
    csv.header({"trial", "beam", "selected_user", "sinr", "rate_bps_hz", "fed_back_bits"});
    for (int t = 0; t < spec.trials; ++t) {
      const Seed trial_seed = spec.seed.sub2(stream_tag::kTrial, static_cast<std::uint64_t>(t));
      const ChannelRealization h = draw_channels(trial_seed, layout, cfg.l_beams);
      const BeamMatrix phi = random_unitary(trial_seed, cfg.l_beams, spec.method);
      const SinrTable table = compute_sinr(h, phi, cfg.p_t, cfg.sigma2);
      const ScheduleOutcome outcome = schedule_with_threshold(table, cfg.alpha, cfg.q_bits);
      for (int i = 0; i < outcome.beams(); ++i) {
        const double beam_rate = outcome.user_for_beam[i] == kNoUser
                                     ? 0.0
                                     : std::log2(1.0 + outcome.sinr_for_beam[i]);
        csv.row({format_int(t), format_int(i), format_int(outcome.user_for_beam[i]),
                 format_double(outcome.sinr_for_beam[i]), format_double(beam_rate),
                 format_int(outcome.feedback_bits)});
      }
    }
  }

  if (!spec.out_path.empty()) {
    CsvWriter csv(spec.out_path);
    csv.comment(provenance(spec));
    csv.header({"k", "rate_no_tfs_bps_hz", "rate_no_tfs_stderr_bps_hz", "rate_tfs_bps_hz",
                "rate_tfs_stderr_bps_hz", "fo_no_tfs_bits", "fo_tfs_bits", "fo_tfs_bits_stderr"});
    for (const auto& r : rows) {
      csv.row({format_int(r.k), format_double(r.rate_no_tfs_bps_hz),
               format_double(r.rate_no_tfs_stderr_bps_hz), format_double(r.rate_tfs_bps_hz),
               format_double(r.rate_tfs_stderr_bps_hz), format_double(r.fo_no_tfs_bits),
               format_double(r.fo_tfs_bits), format_double(r.fo_tfs_bits_stderr)});
    }
  }
  return rows;
}

OptimizeRun run_optimize(const ExperimentSpec& spec) {
  spec.validate();
  const EeProblem prob = make_problem(spec, spec.cfg.k_users);
  OptimizerConfig opt;
  opt.epsilon = spec.cfg.epsilon;
  opt.c_variant = spec.c_variant;

  OptimizeRun run;
  run.result = alternating_optimize(prob, opt);
  if (spec.oracle) run.oracle = grid_search_max(prob);

  {
    // Honesty check on the large-K objective: measure EE at the optimum.
    SystemConfig cfg = spec.cfg;
    cfg.l_beams = run.result.l_beams;
    cfg.p_t = run.result.p_t;
    const UserLayout layout = experiment_layout(spec, cfg.k_users);
    McOptions opts;
    opts.seed = spec.seed;
    opts.trials = spec.trials;
    opts.mode = McMode::kFullFeedback;
    opts.method = spec.method;
    opts.threads = spec.threads;
    const McResult mc = monte_carlo_sum_rate(cfg, layout, opts);
    run.ee_mc_bits_per_j =
        energy_efficiency(cfg.bandwidth_hz * mc.rate.mean_bps_hz, total_power_ris(spec.pm, cfg));
  }

  if (!spec.out_path.empty()) {
    CsvWriter csv(spec.out_path);
    csv.comment(provenance(spec));
    csv.comment("final L=" + format_int(run.result.l_beams) +
                " P_T_w=" + format_double(run.result.p_t) +
                " P_T_dbw=" + format_double(watts_to_dbw(run.result.p_t)) +
                " EE=" + format_double(run.result.ee) +
                " converged=" + (run.result.converged ? std::string("1") : std::string("0")) +
                " ee_mc_bits_per_j=" + format_double(run.ee_mc_bits_per_j));
    if (run.oracle) {
      csv.comment("oracle L=" + format_int(run.oracle->l_beams) +
                  " P_T_w=" + format_double(run.oracle->p_t) +
                  " EE=" + format_double(run.oracle->ee) +
                  " gap=" + format_double(run.oracle->ee - run.result.ee));
    }
    csv.header({"t", "L", "P_T_w", "P_T_dbw", "EE"});
    for (const auto& rec : run.result.trace) {
      csv.row({format_int(rec.iteration), format_int(rec.l_value), format_double(rec.p_t_value),
               format_double(watts_to_dbw(rec.p_t_value)), format_double(rec.ee_value)});
    }
  }
  return run;
}

std::vector<SweepRow> run_sweep(const ExperimentSpec& spec) {
  spec.validate();
  const UserLayout base = experiment_layout(spec, max_of(spec.k_sweep));

  std::vector<SweepRow> rows;
  for (int k : spec.k_sweep) {
    const UserLayout layout = layout_prefix(base, k);
    for (int l : spec.l_list) {
      SystemConfig cfg = spec.cfg;
      cfg.k_users = k;
      cfg.l_beams = l;
      McOptions opts;
      opts.seed = spec.seed;
      opts.trials = spec.trials;
      opts.mode = McMode::kFullFeedback;
      opts.method = spec.method;
      opts.threads = spec.threads;
      const McResult mc = monte_carlo_sum_rate(cfg, layout, opts);
      const double rate_bps = cfg.bandwidth_hz * mc.rate.mean_bps_hz;
      rows.push_back({k, l, cfg.p_t, mc.rate.mean_bps_hz, mc.rate.stderr_bps_hz,
                      energy_efficiency(rate_bps, total_power_ris(spec.pm, cfg)),
                      energy_efficiency(rate_bps, total_power_ma(spec.pm, cfg, l))});
    }
  }

  if (!spec.out_path.empty()) {
    CsvWriter csv(spec.out_path);
    csv.comment(provenance(spec));
    csv.header({"k", "l", "p_t_w", "rate_bps_hz", "rate_stderr_bps_hz", "ee_ris_bits_per_j",
                "ee_ma_bits_per_j"});
    for (const auto& r : rows) {
      csv.row({format_int(r.k), format_int(r.l), format_double(r.p_t_w),
               format_double(r.rate_bps_hz), format_double(r.rate_stderr_bps_hz),
               format_double(r.ee_ris_bits_per_j), format_double(r.ee_ma_bits_per_j)});
    }
  }
  return rows;
}

}  // namespace darb
