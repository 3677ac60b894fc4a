#pragma once

#include <stdexcept>

#include "darb/system_config.hpp"
#include "darb/units.hpp"

namespace darb {

// Hardware power constants, all in watts (converted from the dBm/dBW
// configuration values once at load). eta_t is the transmit amplifier
// conversion efficiency.
struct PowerModel {
  double p_fpga = dbm_to_watts(27.0);  // surface controller board
  double p_pin = dbm_to_watts(7.0);    // per reflecting element
  double p_a = dbm_to_watts(20.0);     // per active antenna chain
  double p_u = dbm_to_watts(20.0);     // per receive chain
  double p_sr = dbm_to_watts(30.0);    // static, surface-assisted transmitter
  double p_sa = dbm_to_watts(33.0);    // static, multi-antenna transmitter
  double p_uk = dbm_to_watts(10.0);    // static, per user equipment
  double eta_t = 0.8;

  void validate() const {
    if (p_fpga < 0 || p_pin < 0 || p_a < 0 || p_u < 0 || p_sr < 0 || p_sa < 0 || p_uk < 0)
      throw std::invalid_argument("PowerModel: powers must be >= 0");
    if (!(eta_t > 0.0) || eta_t > 1.0)
      throw std::invalid_argument("PowerModel: eta_t must lie in (0, 1]");
  }
};

// Reflecting-surface consumption: controller plus one diode per element.
inline double ris_power(const PowerModel& pm, int n_elements) {
  if (n_elements < 0) throw std::invalid_argument("ris_power: n_elements must be >= 0");
  return pm.p_fpga + static_cast<double>(n_elements) * pm.p_pin;
}

// Circuit power of the surface-assisted link: one active antenna, one
// receive chain per beam.
inline double circuit_power_ris(const PowerModel& pm, int l_beams) {
  if (l_beams < 1) throw std::invalid_argument("circuit_power_ris: l_beams must be >= 1");
  return pm.p_a + static_cast<double>(l_beams) * pm.p_u;
}

inline double total_power_ris(const PowerModel& pm, const SystemConfig& cfg) {
  return cfg.p_t / pm.eta_t + ris_power(pm, cfg.n_elements()) + circuit_power_ris(pm, cfg.l_beams) +
         pm.p_sr + static_cast<double>(cfg.k_users) * pm.p_uk;
}

// Conventional m_antennas-element transmitter: per-antenna TX and RX chains
// plus its own static term.
inline double total_power_ma(const PowerModel& pm, const SystemConfig& cfg, int m_antennas) {
  if (m_antennas < 1) throw std::invalid_argument("total_power_ma: m_antennas must be >= 1");
  const double p_ca = static_cast<double>(m_antennas) * (pm.p_a + pm.p_u);
  return cfg.p_t / pm.eta_t + p_ca + pm.p_sa + static_cast<double>(cfg.k_users) * pm.p_uk;
}

inline double energy_efficiency(double rate_bits_per_s, double power_w) {
  if (!(power_w > 0.0)) throw std::domain_error("energy_efficiency: power must be > 0");
  return rate_bits_per_s / power_w;
}

}  // namespace darb
