#include "darb/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace darb {

int ScheduleOutcome::claimed_beams() const {
  int n = 0;
  for (int u : user_for_beam)
    if (u != kNoUser) ++n;
  return n;
}

double ScheduleOutcome::sum_rate_bps_hz() const {
  double rate = 0.0;
  for (int i = 0; i < beams(); ++i) {
    if (user_for_beam[i] != kNoUser) rate += std::log2(1.0 + sinr_for_beam[i]);
  }
  return rate;
}

int beam_index_bits(int l_beams) {
  if (l_beams < 1) throw std::invalid_argument("beam_index_bits: l_beams must be >= 1");
  if (l_beams == 1) return 0;
  return static_cast<int>(std::ceil(std::log2(static_cast<double>(l_beams))));
}

std::int64_t feedback_overhead(int k_users, int l_beams, int q_bits) {
  if (k_users < 0) throw std::invalid_argument("feedback_overhead: k_users must be >= 0");
  return static_cast<std::int64_t>(k_users) * (q_bits + beam_index_bits(l_beams));
}

double feedback_overhead_tfs(int k_users, int l_beams, int q_bits, double alpha,
                             double cdf_at_alpha) {
  if (alpha < 0.0) throw std::invalid_argument("feedback_overhead_tfs: alpha must be >= 0");
  if (cdf_at_alpha < 0.0 || cdf_at_alpha > 1.0)
    throw std::invalid_argument("feedback_overhead_tfs: cdf_at_alpha must lie in [0, 1]");
  return (1.0 - cdf_at_alpha) *
         static_cast<double>(feedback_overhead(k_users, l_beams, q_bits));
}

ScheduleOutcome schedule_max_sinr(const SinrTable& table, int q_bits) {
  const int k_users = table.users();
  const int l = table.beams();
  if (k_users < 1 || l < 1) throw std::invalid_argument("schedule_max_sinr: empty table");

  ScheduleOutcome out;
  out.user_for_beam.assign(l, kNoUser);
  out.sinr_for_beam.assign(l, 0.0);
  for (int i = 0; i < l; ++i) {
    int best = 0;
    for (int k = 1; k < k_users; ++k) {
      if (table.gamma(k, i) > table.gamma(best, i)) best = k;
    }
    out.user_for_beam[i] = best;
    out.sinr_for_beam[i] = table.gamma(best, i);
  }
  out.feedback_messages = k_users;
  out.feedback_bits = feedback_overhead(k_users, l, q_bits);
  return out;
}

ScheduleOutcome schedule_with_threshold(const SinrTable& table, double alpha, int q_bits) {
  if (alpha < 0.0) throw std::invalid_argument("schedule_with_threshold: alpha must be >= 0");
  const int k_users = table.users();
  const int l = table.beams();
  if (k_users < 1 || l < 1) throw std::invalid_argument("schedule_with_threshold: empty table");

  ScheduleOutcome out;
  out.user_for_beam.assign(l, kNoUser);
  out.sinr_for_beam.assign(l, 0.0);
  const int bits_per_message = q_bits + beam_index_bits(l);

  for (int k = 0; k < k_users; ++k) {
    int best_beam = 0;
    for (int i = 1; i < l; ++i) {
      if (table.gamma(k, i) > table.gamma(k, best_beam)) best_beam = i;
    }
    const double best = table.gamma(k, best_beam);
    if (best <= alpha) continue;  // user stays silent
    ++out.feedback_messages;
    if (out.user_for_beam[best_beam] == kNoUser || best > out.sinr_for_beam[best_beam]) {
      out.user_for_beam[best_beam] = k;
      out.sinr_for_beam[best_beam] = best;
    }
  }
  out.feedback_bits = out.feedback_messages * bits_per_message;
  return out;
}

}  // namespace darb
