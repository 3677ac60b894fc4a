#pragma once

#include <stdexcept>

#include "darb/units.hpp"

namespace darb {

// Scalar system parameters. N = l_beams^2 reflecting elements arranged as an
// l_beams x l_beams grid; one beam per row; per-beam power is p_t / l_beams
// (equal allocation). Immutable after construction by convention: validate()
// once at load, then share freely across workers.
struct SystemConfig {
  int k_users = 100;
  int l_beams = 18;
  double p_t = dbw_to_watts(1.14);      // total transmit power [W]
  double sigma2 = dbm_to_watts(-80.0);  // receiver noise power [W]
  double bandwidth_hz = 180e3;
  double area_side_m = 60.0;
  int q_bits = 4;          // quantization bits of a fed-back SINR
  double alpha = 0.1;      // threshold feedback SINR cutoff
  double epsilon = 0.05;   // optimizer stop threshold on the EE increment
  int l_max = 20;
  double p_max = dbw_to_watts(13.0);

  int n_elements() const { return l_beams * l_beams; }
  double per_beam_power() const { return p_t / l_beams; }

  void validate() const {
    if (k_users < 1) throw std::invalid_argument("SystemConfig: k_users must be >= 1");
    if (l_beams < 1 || l_beams > l_max)
      throw std::invalid_argument("SystemConfig: l_beams must lie in [1, l_max]");
    if (!(p_t > 0.0) || p_t > p_max)
      throw std::invalid_argument("SystemConfig: p_t must lie in (0, p_max]");
    if (!(sigma2 > 0.0)) throw std::invalid_argument("SystemConfig: sigma2 must be > 0");
    if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("SystemConfig: bandwidth_hz must be > 0");
    if (!(area_side_m > 0.0)) throw std::invalid_argument("SystemConfig: area_side_m must be > 0");
    if (q_bits < 1) throw std::invalid_argument("SystemConfig: q_bits must be >= 1");
    if (alpha < 0.0) throw std::invalid_argument("SystemConfig: alpha must be >= 0");
    if (!(epsilon > 0.0)) throw std::invalid_argument("SystemConfig: epsilon must be > 0");
    if (l_max < 1) throw std::invalid_argument("SystemConfig: l_max must be >= 1");
    if (!(p_max > 0.0)) throw std::invalid_argument("SystemConfig: p_max must be > 0");
  }
};

}  // namespace darb
