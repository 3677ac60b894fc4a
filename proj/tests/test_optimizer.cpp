#include <doctest.h>

#include <cmath>

#include "darb/channel.hpp"
#include "darb/optimizer.hpp"
#include "darb/rng.hpp"

using namespace darb;

namespace {

EeProblem table_problem(double beta_ref_dist = 30.0) {
  EeProblem prob;
  prob.k_users = 100;
  prob.beta = path_loss(beta_ref_dist);
  return prob;
}

// Numeric derivative of the EE objective in its second or third argument.
double numeric_dp(const EeProblem& prob, double l, double p) {
  const double h = 1e-6 * p;
  return (ee_objective(prob, l, p + h) - ee_objective(prob, l, p - h)) / (2.0 * h);
}

double numeric_dl(const EeProblem& prob, double l, double p) {
  const double h = 1e-6 * l;
  return (ee_objective(prob, l + h, p) - ee_objective(prob, l - h, p)) / (2.0 * h);
}

EeProblem random_instance(RngStream& rng) {
  auto log_uniform = [&rng](double lo, double hi) {
    return lo * std::exp(rng.uniform01() * std::log(hi / lo));
  };
  for (;;) {
    EeProblem prob;
    prob.pm.p_pin = log_uniform(1e-4, 0.05);
    prob.pm.p_u = log_uniform(0.01, 0.3);
    prob.pm.p_a = log_uniform(0.01, 0.3);
    prob.pm.p_fpga = log_uniform(0.05, 2.0);
    prob.pm.p_sr = log_uniform(0.1, 3.0);
    prob.pm.p_sa = log_uniform(0.5, 5.0);
    prob.pm.p_uk = log_uniform(1e-3, 0.05);
    prob.pm.eta_t = rng.uniform(0.5, 0.95);
    prob.k_users = 2 + static_cast<int>(rng.uniform01() * 499);
    prob.sigma2 = log_uniform(1e-12, 1e-9);
    prob.beta = log_uniform(1e-10, 1e-6);
    prob.p_max = log_uniform(5.0, 50.0);
    prob.l_max = 20;
    // keep instances with a usable positive-rate region
    const double g = prob.beta * std::log(static_cast<double>(prob.k_users)) *
                     (0.5 * prob.p_max) / prob.sigma2;
    if (g > 2.0) return prob;
  }
}

}  // namespace

TEST_CASE("p3: monotone numerator saturates at l_max") {
  EeProblem prob = table_problem();
  prob.pm.p_pin = 0.0;
  prob.pm.p_u = 0.0;
  prob.beta = 1e-3;  // enormous G keeps f increasing over [1, 20]
  const auto res = solve_p3_elements(prob, 1.3, OptimizerConfig{});
  CHECK(res.l_integer == prob.l_max);
}

TEST_CASE("p3: integer recovery beats every other integer") {
  RngStream rng(Seed{314, 0});
  for (int rep = 0; rep < 25; ++rep) {
    const EeProblem prob = random_instance(rng);
    const double p = prob.p_max * rng.uniform(0.05, 1.0);
    P3Result res;
    try {
      res = solve_p3_elements(prob, p, OptimizerConfig{});
    } catch (const InfeasibleError&) {
      continue;  // numerator nonpositive everywhere at this power
    }
    double best = -1.0;
    int best_l = 1;
    for (int l = 1; l <= prob.l_max; ++l) {
      const double ee = ee_objective(prob, l, p);
      if (ee > best) {
        best = ee;
        best_l = l;
      }
    }
    CHECK(res.ee == doctest::Approx(best).epsilon(1e-12));
    CHECK(res.l_integer == best_l);
  }
}

TEST_CASE("p3: unimodality witness holds on the table instance") {
  const auto res = solve_p3_elements(table_problem(), 1.3, OptimizerConfig{});
  CHECK(res.unimodal);
  CHECK(numeric_dl(table_problem(), res.l_continuous, 1.3) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-5));
}

TEST_CASE("p4: stationarity and grid optimality") {
  const EeProblem prob = table_problem();
  const OptimizerConfig opt;
  const auto res = solve_p4_power(prob, 18, opt);
  REQUIRE(res.p_t > 0.0);
  REQUIRE(res.p_t < prob.p_max);

  // first-order condition at the interior stationary point
  const double f = ee_objective(prob, 18, res.p_t);
  CHECK(std::abs(numeric_dp(prob, 18, res.p_t)) < 1e-8 * std::abs(f / res.p_t) + 1e-15);

  // dense log-spaced grid cannot beat it by more than 1e-6 relative
  const double p_lo = 18.0 * prob.sigma2 / (prob.beta * std::log(100.0));
  double best = 0.0;
  for (int j = 0; j < 10000; ++j) {
    const double p = p_lo * std::exp((std::log(prob.p_max) - std::log(p_lo)) * j / 9999.0);
    best = std::max(best, ee_objective(prob, 18, p));
  }
  CHECK(res.ee >= best - 1e-6 * best);
}

TEST_CASE("p4: huge constant term pushes the optimum to p_max") {
  EeProblem prob = table_problem();
  prob.pm.p_sr = 1e6;  // c ~ 1e6 W
  const auto res = solve_p4_power(prob, 18, OptimizerConfig{});
  CHECK(res.p_t == doctest::Approx(prob.p_max).epsilon(1e-9));
}

TEST_CASE("p4: infeasible when even p_max cannot lift the rate") {
  EeProblem prob = table_problem();
  prob.beta = 1e-30;
  CHECK_THROWS_AS(solve_p4_power(prob, 4, OptimizerConfig{}), InfeasibleError);
}

TEST_CASE("alternating optimization on the table instance") {
  const EeProblem prob = table_problem();
  OptimizerConfig opt;
  const auto res = alternating_optimize(prob, opt);
  CHECK(res.converged);
  CHECK(res.iterations <= 10);
  CHECK(!res.unimodality_warning);
  CHECK(res.ee == res.trace.back().ee_value);

  const auto grid = grid_search_max(prob);
  CHECK(res.ee >= grid.ee - std::max(opt.epsilon, 1e-6 * grid.ee));

  // restarting at the solved optimum stays put within two iterations
  OptimizerConfig warm = opt;
  warm.initial_p_t = res.p_t;
  const auto again = alternating_optimize(prob, warm);
  CHECK(again.iterations <= 2);
  CHECK(again.ee == doctest::Approx(res.ee).epsilon(1e-9));
}

TEST_CASE("trace is monotone and converges on random instances") {
  RngStream rng(Seed{2718, 0});
  for (int rep = 0; rep < 20; ++rep) {
    const EeProblem prob = random_instance(rng);
    const OptimizerConfig opt;
    const auto res = alternating_optimize(prob, opt);
    CHECK(res.converged);
    for (std::size_t i = 1; i < res.trace.size(); ++i) {
      CHECK(res.trace[i].ee_value >=
            res.trace[i - 1].ee_value - 1e-12 * std::max(1.0, res.trace[i].ee_value));
    }
  }
}

TEST_CASE("scaling all power constants rescales EE but not the argmax") {
  const EeProblem base = table_problem();
  EeProblem scaled = base;
  const double c = 3.7;
  scaled.pm.p_pin *= c;
  scaled.pm.p_u *= c;
  scaled.pm.p_a *= c;
  scaled.pm.p_fpga *= c;
  scaled.pm.p_sr *= c;
  scaled.pm.p_sa *= c;
  scaled.pm.p_uk *= c;
  scaled.pm.eta_t /= c;  // scales the amplifier term as well

  const auto a = alternating_optimize(base, OptimizerConfig{});
  const auto b = alternating_optimize(scaled, OptimizerConfig{});
  CHECK(a.l_beams == b.l_beams);
  CHECK(a.p_t == doctest::Approx(b.p_t).epsilon(1e-8));
  CHECK(a.ee == doctest::Approx(b.ee * c).epsilon(1e-9));
}

TEST_CASE("infeasible problems raise with the trace attached") {
  EeProblem prob = table_problem();
  prob.beta = 1e-30;
  try {
    alternating_optimize(prob, OptimizerConfig{});
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& e) {
    CHECK(e.trace.size() == 1);  // the initial record
  }
}

TEST_CASE("c variant parsing and paper variant runs") {
  CHECK(parse_c_variant("paper") == CVariant::kPaper);
  CHECK(parse_c_variant("corrected") == CVariant::kCorrected);
  CHECK_THROWS_AS(parse_c_variant("x"), std::invalid_argument);

  OptimizerConfig opt;
  opt.c_variant = CVariant::kPaper;
  const auto res = alternating_optimize(table_problem(), opt);
  CHECK(res.converged);
  CHECK(res.ee > 0.0);
}
