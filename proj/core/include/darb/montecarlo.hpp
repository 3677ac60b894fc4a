#pragma once

#include <cstdint>
#include <vector>

#include "darb/beams.hpp"
#include "darb/channel.hpp"
#include "darb/schedule.hpp"
#include "darb/system_config.hpp"

namespace darb {

// Which scheduler a trial runs.
//   kFullFeedback:      threshold protocol with alpha = 0 (every user reports
//                       its best beam).
//   kThresholdFeedback: threshold protocol with the configured alpha.
//   kIdealArgmax:       per-beam argmax over all users; matches the
//                       closed-form order statistics.
enum class McMode { kFullFeedback, kThresholdFeedback, kIdealArgmax };

struct RateEstimate {
  double mean_bps_hz = 0.0;
  double stderr_bps_hz = 0.0;
  int trials = 0;
};

struct TrialStats {
  int trial = 0;
  double rate_bps_hz = 0.0;
  std::int64_t feedback_bits = 0;
  int claimed_beams = 0;
};

struct McOptions {
  Seed seed;
  int trials = 1000;
  McMode mode = McMode::kFullFeedback;
  BeamMethod method = BeamMethod::kPhaseDft;
  int threads = 1;                             // trials are split across threads
  std::vector<TrialStats>* trial_log = nullptr;  // optional, filled in trial order
};

struct McResult {
  RateEstimate rate;
  double feedback_bits_mean = 0.0;
  double feedback_bits_stderr = 0.0;
  double claimed_beams_mean = 0.0;
};

// Averages the scheduled sum rate over independent trials, redrawing the
// channel realization and the beam matrix each trial. Per-trial substreams
// make the result independent of the thread count and bit-identical across
// runs with the same seed.
McResult monte_carlo_sum_rate(const SystemConfig& cfg, const UserLayout& layout,
                              const McOptions& opts);

}  // namespace darb
