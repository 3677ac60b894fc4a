#pragma once

#include <cstdint>
#include <vector>

#include "darb/sinr.hpp"

namespace darb {

inline constexpr int kNoUser = -1;

// Per-beam assignment plus the uplink accounting for one slot.
struct ScheduleOutcome {
  std::vector<int> user_for_beam;     // kNoUser when nobody claimed the beam
  std::vector<double> sinr_for_beam;  // 0 for unclaimed beams
  std::int64_t feedback_messages = 0;
  std::int64_t feedback_bits = 0;

  int beams() const { return static_cast<int>(user_for_beam.size()); }
  int claimed_beams() const;
  double sum_rate_bps_hz() const;  // sum over claimed beams of log2(1 + sinr)
};

// Bits needed to address one of l_beams beams.
int beam_index_bits(int l_beams);

// Full-feedback overhead: every user reports one quantized SINR plus a beam
// index, K * (Q + ceil(log2 L)) bits.
std::int64_t feedback_overhead(int k_users, int l_beams, int q_bits);

// Expected overhead under a feedback-probability model: (1 - F(alpha)) * FO,
// where cdf_at_alpha is the CDF of the statistic each user compares against
// the threshold.
double feedback_overhead_tfs(int k_users, int l_beams, int q_bits, double alpha,
                             double cdf_at_alpha);

// Idealized per-beam argmax over all users (every user contends on every
// beam); ties break toward the lowest user index. This is the selection rule
// the closed-form order statistics describe.
ScheduleOutcome schedule_max_sinr(const SinrTable& table, int q_bits);

// Protocol-faithful selection: each user reports only its single best
// (SINR, beam) pair, and only when that best exceeds alpha. A beam picks the
// strongest reporter; beams nobody reported stay unclaimed. alpha = 0 is the
// no-threshold protocol.
ScheduleOutcome schedule_with_threshold(const SinrTable& table, double alpha, int q_bits);

}  // namespace darb
