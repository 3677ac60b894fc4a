#include <doctest.h>

#include "darb/config_io.hpp"
#include "darb/csv.hpp"

using namespace darb;

TEST_CASE("config json applies dB fields") {
  SystemConfig cfg;
  PowerModel pm;
  apply_config_json(R"({"p_fpga_dbm": 27, "p_t_dbw": 0.0, "sigma2_dbm": -80,
                        "k_users": 42, "alpha": 0.25})",
                    cfg, pm);
  CHECK(pm.p_fpga == doctest::Approx(0.50119).epsilon(1e-5));
  CHECK(cfg.p_t == doctest::Approx(1.0));
  CHECK(cfg.sigma2 == doctest::Approx(1e-11).epsilon(1e-12));
  CHECK(cfg.k_users == 42);
  CHECK(cfg.alpha == doctest::Approx(0.25));
}

TEST_CASE("config json linear twins and rejection") {
  SystemConfig cfg;
  PowerModel pm;
  apply_config_json(R"({"p_pin_w": 0.004, "p_t_w": 2.5})", cfg, pm);
  CHECK(pm.p_pin == doctest::Approx(0.004));
  CHECK(cfg.p_t == doctest::Approx(2.5));

  CHECK_THROWS_AS(apply_config_json(R"({"nonsense": 1})", cfg, pm), std::invalid_argument);
  CHECK_THROWS_AS(apply_config_json("{oops", cfg, pm), std::invalid_argument);
  CHECK_THROWS_AS(apply_config_json(R"({"k_users": 2.5})", cfg, pm), std::invalid_argument);

  // invariant violations surface on load
  CHECK_THROWS_AS(apply_config_json(R"({"p_t_dbw": 14})", cfg, pm), std::invalid_argument);
  CHECK_THROWS_AS(apply_config_json(R"({"eta_t": 1.5})", cfg, pm), std::invalid_argument);
}

TEST_CASE("canonical config hash is stable and sensitive") {
  SystemConfig cfg;
  PowerModel pm;
  const std::string a = canonical_config_json(cfg, pm);
  const std::string b = canonical_config_json(cfg, pm);
  CHECK(a == b);
  cfg.k_users = 101;
  const std::string c = canonical_config_json(cfg, pm);
  CHECK(fnv1a64(a) != fnv1a64(c));
}

TEST_CASE("csv number formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-3.25) == "-3.25");
  CHECK(format_int(-12) == "-12");
  CHECK(hex16(0x1b3) == "00000000000001b3");
}
