#include "darb/config_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "darb/csv.hpp"
#include "darb/units.hpp"

namespace darb {

namespace {

using nlohmann::json;

double as_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw std::invalid_argument("config: " + key + " must be a number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw std::invalid_argument("config: " + key + " must be an integer");
  return v.get<int>();
}

}  // namespace

void apply_config_json(const std::string& json_text, SystemConfig& cfg, PowerModel& pm) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config: top level must be an object");

  for (const auto& [key, value] : doc.items()) {
    if (key == "p_fpga_dbm") pm.p_fpga = dbm_to_watts(as_number(value, key));
    else if (key == "p_fpga_w") pm.p_fpga = as_number(value, key);
    else if (key == "p_pin_dbm") pm.p_pin = dbm_to_watts(as_number(value, key));
    else if (key == "p_pin_w") pm.p_pin = as_number(value, key);
    else if (key == "p_a_dbm") pm.p_a = dbm_to_watts(as_number(value, key));
    else if (key == "p_a_w") pm.p_a = as_number(value, key);
    else if (key == "p_u_dbm") pm.p_u = dbm_to_watts(as_number(value, key));
    else if (key == "p_u_w") pm.p_u = as_number(value, key);
    else if (key == "p_sr_dbm") pm.p_sr = dbm_to_watts(as_number(value, key));
    else if (key == "p_sr_w") pm.p_sr = as_number(value, key);
    else if (key == "p_sa_dbm") pm.p_sa = dbm_to_watts(as_number(value, key));
    else if (key == "p_sa_w") pm.p_sa = as_number(value, key);
    else if (key == "p_uk_dbm") pm.p_uk = dbm_to_watts(as_number(value, key));
    else if (key == "p_uk_w") pm.p_uk = as_number(value, key);
    else if (key == "eta_t") pm.eta_t = as_number(value, key);
    else if (key == "k_users") cfg.k_users = as_int(value, key);
    else if (key == "l_beams") cfg.l_beams = as_int(value, key);
    else if (key == "p_t_dbw") cfg.p_t = dbw_to_watts(as_number(value, key));
    else if (key == "p_t_w") cfg.p_t = as_number(value, key);
    else if (key == "p_max_dbw") cfg.p_max = dbw_to_watts(as_number(value, key));
    else if (key == "p_max_w") cfg.p_max = as_number(value, key);
    else if (key == "sigma2_dbm") cfg.sigma2 = dbm_to_watts(as_number(value, key));
    else if (key == "sigma2_w") cfg.sigma2 = as_number(value, key);
    else if (key == "bandwidth_hz") cfg.bandwidth_hz = as_number(value, key);
    else if (key == "area_side_m") cfg.area_side_m = as_number(value, key);
    else if (key == "q_bits") cfg.q_bits = as_int(value, key);
    else if (key == "alpha") cfg.alpha = as_number(value, key);
    else if (key == "epsilon") cfg.epsilon = as_number(value, key);
    else if (key == "l_max") cfg.l_max = as_int(value, key);
    else throw std::invalid_argument("config: unknown key: " + key);
  }
  pm.validate();
  cfg.validate();
}

void load_config_file(const std::string& path, SystemConfig& cfg, PowerModel& pm) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_config_json(buf.str(), cfg, pm);
}

std::string canonical_config_json(const SystemConfig& cfg, const PowerModel& pm) {
  // nlohmann::json orders keys lexicographically, which keeps this canonical.
  json doc;
  doc["alpha"] = format_double(cfg.alpha);
  doc["area_side_m"] = format_double(cfg.area_side_m);
  doc["bandwidth_hz"] = format_double(cfg.bandwidth_hz);
  doc["epsilon"] = format_double(cfg.epsilon);
  doc["eta_t"] = format_double(pm.eta_t);
  doc["k_users"] = cfg.k_users;
  doc["l_beams"] = cfg.l_beams;
  doc["l_max"] = cfg.l_max;
  doc["p_a_w"] = format_double(pm.p_a);
  doc["p_fpga_w"] = format_double(pm.p_fpga);
  doc["p_max_w"] = format_double(cfg.p_max);
  doc["p_pin_w"] = format_double(pm.p_pin);
  doc["p_sa_w"] = format_double(pm.p_sa);
  doc["p_sr_w"] = format_double(pm.p_sr);
  doc["p_t_w"] = format_double(cfg.p_t);
  doc["p_u_w"] = format_double(pm.p_u);
  doc["p_uk_w"] = format_double(pm.p_uk);
  doc["q_bits"] = cfg.q_bits;
  doc["sigma2_w"] = format_double(cfg.sigma2);
  return doc.dump();
}

}  // namespace darb
