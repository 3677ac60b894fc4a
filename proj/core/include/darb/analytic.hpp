#pragma once

#include <stdexcept>

#include "darb/power.hpp"

namespace darb {

// Parameters of the closed-form SINR law. snr_eff = beta * p_t / sigma2 with
// a scalar reference gain beta; beta = 1 recovers the normalized setup the
// closed forms are usually quoted in.
struct LinkStats {
  int l_beams = 1;
  double snr_eff = 1.0;
  int k_users = 1;

  void validate() const {
    if (l_beams < 1) throw std::invalid_argument("LinkStats: l_beams must be >= 1");
    if (!(snr_eff > 0.0)) throw std::invalid_argument("LinkStats: snr_eff must be > 0");
    if (k_users < 1) throw std::invalid_argument("LinkStats: k_users must be >= 1");
  }
};

// Base used for the multiuser-diversity log K term of the large-K rate.
// Rates themselves are always base-2 (bits).
enum class InnerLog { kNatural, kBase2 };

// CDF of a single user/beam SINR:
//   F(g) = 1 - exp(-L g / snr_eff) / (1 + g)^(L-1),  g >= 0.
double sinr_cdf(double gamma, const LinkStats& stats);

// Density of the per-beam selected (max over K users) SINR, d/dg F(g)^K.
double selected_sinr_pdf(double gamma, const LinkStats& stats);

// CDF of a user's best SINR across its L beams, P(max_i gamma_i <= alpha).
// One-dimensional integral over the channel norm; reduces to sinr_cdf at
// L = 1. This is the feedback-probability law of the threshold protocol.
double best_sinr_cdf(double alpha, const LinkStats& stats);

// Exact finite-K sum rate L * Integral log2(1+g) f_sel(g) dg by adaptive
// quadrature (relative tolerance 1e-8). Throws QuadratureError if the
// integral fails to converge.
double sum_rate_integral(const LinkStats& stats);

// Large-K limit L log2(beta ln K) + L log2(P_T / (L sigma2)), expressed via
// snr_eff = beta P_T / sigma2. The inner log of K is natural by default
// (base-2 selectable for sensitivity runs); outer logs are base 2. May be
// negative when beta ln K is small; returned as-is with *negative_rate set.
double sum_rate_asymptotic(const LinkStats& stats, double beta,
                           InnerLog inner = InnerLog::kNatural,
                           bool* negative_rate = nullptr);

// Threshold-feedback rate [1 - F(alpha)^K] * sum_rate_integral(stats).
double tfs_sum_rate(const LinkStats& stats, double alpha);

// One problem P2 instance: everything the EE objective needs besides (L, p).
struct EeProblem {
  PowerModel pm;
  int k_users = 100;
  double beta = 1.0;    // scalar reference gain
  double sigma2 = dbm_to_watts(-80.0);
  int l_max = 20;
  double p_max = dbw_to_watts(13.0);
  InnerLog inner_log = InnerLog::kNatural;

  void validate() const {
    pm.validate();
    if (k_users < 2) throw std::invalid_argument("EeProblem: k_users must be >= 2");
    if (!(beta > 0.0)) throw std::invalid_argument("EeProblem: beta must be > 0");
    if (!(sigma2 > 0.0)) throw std::invalid_argument("EeProblem: sigma2 must be > 0");
    if (l_max < 1) throw std::invalid_argument("EeProblem: l_max must be >= 1");
    if (!(p_max > 0.0)) throw std::invalid_argument("EeProblem: p_max must be > 0");
  }
};

// Large-K spectral energy efficiency of the surface-assisted system,
//   [L log2(beta ln K) + L log2(p / (L sigma2))] /
//   [p / eta_T + L^2 P_PIN + L P_U + P_FPGA + P_A + P_SR + K P_UK],
// in bits/s/Hz per watt; multiply by the bandwidth for bits/joule. The rate
// numerator is clamped at zero (flagged via *rate_clamped); the denominator
// equals total_power_ris for the same configuration.
double ee_objective(const EeProblem& prob, double l_beams, double p_t,
                    bool* rate_clamped = nullptr);

// Denominator of ee_objective (continuous in l).
double ee_denominator(const EeProblem& prob, double l_beams, double p_t);

}  // namespace darb
