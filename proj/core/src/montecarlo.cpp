#include "darb/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace darb {

namespace {

TrialStats run_trial(const SystemConfig& cfg, const UserLayout& layout, const McOptions& opts,
                     int trial) {
  const Seed trial_seed = opts.seed.sub2(stream_tag::kTrial, static_cast<std::uint64_t>(trial));
  const ChannelRealization h = draw_channels(trial_seed, layout, cfg.l_beams);
  const BeamMatrix phi = random_unitary(trial_seed, cfg.l_beams, opts.method);
  const SinrTable table = compute_sinr(h, phi, cfg.p_t, cfg.sigma2);

  ScheduleOutcome outcome;
  switch (opts.mode) {
    case McMode::kFullFeedback:
      outcome = schedule_with_threshold(table, 0.0, cfg.q_bits);
      break;
    case McMode::kThresholdFeedback:
      outcome = schedule_with_threshold(table, cfg.alpha, cfg.q_bits);
      break;
    case McMode::kIdealArgmax:
      outcome = schedule_max_sinr(table, cfg.q_bits);
      break;
  }
  return TrialStats{trial, outcome.sum_rate_bps_hz(), outcome.feedback_bits,
                    outcome.claimed_beams()};
}

}  // namespace

McResult monte_carlo_sum_rate(const SystemConfig& cfg, const UserLayout& layout,
                              const McOptions& opts) {
  if (opts.trials < 1) throw std::invalid_argument("monte_carlo_sum_rate: trials must be >= 1");
  if (layout.size() != cfg.k_users)
    throw std::invalid_argument("monte_carlo_sum_rate: layout size != cfg.k_users");

  std::vector<TrialStats> stats(opts.trials);
  const int threads = std::max(1, opts.threads);
  if (threads == 1) {
    for (int t = 0; t < opts.trials; ++t) stats[t] = run_trial(cfg, layout, opts, t);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (int t = w; t < opts.trials; t += threads) stats[t] = run_trial(cfg, layout, opts, t);
      });
    }
    for (auto& th : pool) th.join();
  }

  // Fixed-order reduction keeps the estimate identical for any thread count.
  double rate_sum = 0.0, bits_sum = 0.0, beams_sum = 0.0;
  for (const auto& s : stats) {
    rate_sum += s.rate_bps_hz;
    bits_sum += static_cast<double>(s.feedback_bits);
    beams_sum += static_cast<double>(s.claimed_beams);
  }
  const double n = static_cast<double>(opts.trials);
  const double rate_mean = rate_sum / n;
  const double bits_mean = bits_sum / n;

  double rate_var = 0.0, bits_var = 0.0;
  for (const auto& s : stats) {
    rate_var += (s.rate_bps_hz - rate_mean) * (s.rate_bps_hz - rate_mean);
    bits_var += (static_cast<double>(s.feedback_bits) - bits_mean) *
                (static_cast<double>(s.feedback_bits) - bits_mean);
  }
  const double denom = opts.trials > 1 ? n - 1.0 : 1.0;
  McResult out;
  out.rate = RateEstimate{rate_mean,
                          opts.trials > 1 ? std::sqrt(rate_var / denom / n) : 0.0,
                          opts.trials};
  out.feedback_bits_mean = bits_mean;
  out.feedback_bits_stderr = opts.trials > 1 ? std::sqrt(bits_var / denom / n) : 0.0;
  out.claimed_beams_mean = beams_sum / n;
  if (opts.trial_log != nullptr) *opts.trial_log = std::move(stats);
  return out;
}

}  // namespace darb
