#pragma once

#include <string>

#include "darb/power.hpp"
#include "darb/system_config.hpp"

namespace darb {

// Flat JSON key/value configuration. Keys mirror the parameter names, with dB
// unit fields suffixed _dbm / _dbw (linear-watt twins suffixed _w are also
// accepted). Unknown keys are rejected. Recognized keys:
//   p_fpga_dbm, p_pin_dbm, p_a_dbm, p_u_dbm, p_sr_dbm, p_sa_dbm, p_uk_dbm,
//   eta_t, k_users, l_beams, p_t_dbw, p_max_dbw, sigma2_dbm, bandwidth_hz,
//   area_side_m, q_bits, alpha, epsilon, l_max
// and the *_w variants of every power field.
void apply_config_json(const std::string& json_text, SystemConfig& cfg, PowerModel& pm);

void load_config_file(const std::string& path, SystemConfig& cfg, PowerModel& pm);

// Canonical (sorted-key, linear-watt) serialization used for provenance
// hashing and reproducibility records.
std::string canonical_config_json(const SystemConfig& cfg, const PowerModel& pm);

}  // namespace darb
