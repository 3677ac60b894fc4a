#include "darb/optimizer.hpp"

#include <cmath>
#include <functional>

namespace darb {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double inner_log_k(const EeProblem& prob) {
  const double k = static_cast<double>(prob.k_users);
  return prob.inner_log == InnerLog::kNatural ? std::log(k) : std::log2(k);
}

double static_circuit_power(const EeProblem& prob) {
  return prob.pm.p_fpga + prob.pm.p_a + prob.pm.p_sr +
         static_cast<double>(prob.k_users) * prob.pm.p_uk;
}

// Sign-of-derivative bisection for a pseudo-concave objective on [lo, hi].
// deriv_sign returns N'D - ND'; positive means "increasing".
double bisect_stationary(const std::function<double(double)>& deriv_sign, double lo, double hi,
                         double rel_tol) {
  if (deriv_sign(lo) <= 0.0) return lo;
  if (deriv_sign(hi) >= 0.0) return hi;
  for (int it = 0; it < 200 && (hi - lo) > rel_tol * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (deriv_sign(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double p4_constant(const EeProblem& prob, double l, CVariant variant) {
  if (variant == CVariant::kPaper) {
    return l * (prob.pm.p_a + prob.pm.p_u) + prob.pm.p_sa +
           static_cast<double>(prob.k_users) * prob.pm.p_uk;
  }
  return l * l * prob.pm.p_pin + l * prob.pm.p_u + static_circuit_power(prob);
}

}  // namespace

CVariant parse_c_variant(const std::string& name) {
  if (name == "corrected") return CVariant::kCorrected;
  if (name == "paper") return CVariant::kPaper;
  throw std::invalid_argument("unknown c variant: " + name + " (expected corrected|paper)");
}

std::string to_string(CVariant v) { return v == CVariant::kCorrected ? "corrected" : "paper"; }

P3Result solve_p3_elements(const EeProblem& prob, double p_t, const OptimizerConfig& opt) {
  prob.validate();
  if (!(p_t > 0.0)) throw std::domain_error("solve_p3_elements: p_t must be > 0");

  // Numerator l (G - log2 l) with G = log2(beta logK p / sigma2); positive
  // for l < 2^G only.
  const double g_const = std::log2(prob.beta * inner_log_k(prob) * p_t / prob.sigma2);
  if (g_const <= 0.0) {
    throw InfeasibleError("solve_p3_elements: rate numerator is nonpositive for every L (G = " +
                          std::to_string(g_const) + ")");
  }
  const double l_max_d = static_cast<double>(prob.l_max);
  double hi = l_max_d;
  if (g_const < std::log2(l_max_d)) hi = std::exp2(g_const) * (1.0 - 1e-12);
  double l_star = 1.0;
  if (hi > 1.0) {
    const double a_const = p_t / prob.pm.eta_t + static_circuit_power(prob);
    auto deriv_sign = [&](double l) {
      const double numer = l * (g_const - std::log2(l));
      const double numer_d = g_const - std::log2(l) - 1.0 / kLn2;
      const double denom = prob.pm.p_pin * l * l + prob.pm.p_u * l + a_const;
      const double denom_d = 2.0 * prob.pm.p_pin * l + prob.pm.p_u;
      return numer_d * denom - numer * denom_d;
    };
    l_star = bisect_stationary(deriv_sign, 1.0, hi, opt.bisect_rel_tol);
  }

  P3Result res;
  res.l_continuous = l_star;
  const int lo_int = std::max(1, std::min(prob.l_max, static_cast<int>(std::floor(l_star))));
  const int hi_int = std::max(1, std::min(prob.l_max, static_cast<int>(std::ceil(l_star))));
  const double ee_lo = ee_objective(prob, lo_int, p_t);
  const double ee_hi = hi_int == lo_int ? ee_lo : ee_objective(prob, hi_int, p_t);
  if (ee_hi > ee_lo) {
    res.l_integer = hi_int;
    res.ee = ee_hi;
  } else {
    res.l_integer = lo_int;  // ties keep the smaller surface
    res.ee = ee_lo;
  }

  // Unimodality witness on the integer grid: the sign of successive
  // differences may change at most once.
  int changes = 0;
  int prev_sign = 0;
  double prev = ee_objective(prob, 1, p_t);
  for (int l = 2; l <= prob.l_max; ++l) {
    const double cur = ee_objective(prob, l, p_t);
    const int sign = cur > prev ? 1 : (cur < prev ? -1 : 0);
    if (sign != 0) {
      if (prev_sign == -1 && sign == 1) ++changes;
      prev_sign = sign;
    }
    prev = cur;
  }
  res.unimodal = changes == 0;
  return res;
}

P4Result solve_p4_power(const EeProblem& prob, int l_beams, const OptimizerConfig& opt) {
  prob.validate();
  if (l_beams < 1) throw std::invalid_argument("solve_p4_power: l_beams must be >= 1");
  const double l = static_cast<double>(l_beams);

  // Numerator L log2(p / (L sigma2)) + b crosses zero at p_lo.
  const double p_lo = l * prob.sigma2 / (prob.beta * inner_log_k(prob));
  if (!(p_lo < prob.p_max)) {
    throw InfeasibleError("solve_p4_power: no power in (0, p_max] gives a positive rate (p_lo = " +
                          std::to_string(p_lo) + " W)");
  }
  const double c_const = p4_constant(prob, l, opt.c_variant);
  const double b_const = l * std::log2(prob.beta * inner_log_k(prob));
  auto deriv_sign = [&](double p) {
    const double numer = l * std::log2(p / (l * prob.sigma2)) + b_const;
    const double numer_d = l / (p * kLn2);
    const double denom = p / prob.pm.eta_t + c_const;
    const double denom_d = 1.0 / prob.pm.eta_t;
    return numer_d * denom - numer * denom_d;
  };
  const double lo = p_lo <= 0.0 ? prob.p_max * 1e-15 : p_lo * (1.0 + 1e-12);
  const double p_star = bisect_stationary(deriv_sign, lo, prob.p_max, opt.bisect_rel_tol);

  P4Result res;
  res.p_t = p_star;
  res.ee = ee_objective(prob, l, p_star);
  return res;
}

OptimizationResult alternating_optimize(const EeProblem& prob, const OptimizerConfig& opt) {
  prob.validate();
  if (!(opt.epsilon > 0.0)) throw std::invalid_argument("alternating_optimize: epsilon must be > 0");

  OptimizationResult result;
  double p = opt.initial_p_t > 0.0 ? std::min(opt.initial_p_t, prob.p_max) : 0.5 * prob.p_max;
  int l = 1;
  double ee = ee_objective(prob, l, p);
  result.trace.push_back({0, l, p, ee});

  try {
    int prev_l = l;
    double prev_p = p;
    for (int t = 1; t <= opt.max_iterations; ++t) {
      const P3Result p3 = solve_p3_elements(prob, p, opt);
      l = p3.l_integer;
      if (!p3.unimodal) result.unimodality_warning = true;
      const P4Result p4 = solve_p4_power(prob, l, opt);
      p = p4.p_t;
      const double ee_next = p4.ee;
      result.trace.push_back({t, l, p, ee_next});
      result.iterations = t;
      const double increment = ee_next - ee;
      ee = ee_next;
      // The increment test alone can fire while the iterate is still moving
      // (epsilon is absolute, and per-step gains shrink along a ridge), so
      // convergence additionally requires a stationary iterate.
      const bool stationary =
          l == prev_l && std::abs(p - prev_p) <= 1e-8 * prob.p_max;
      const bool stalled = increment <= 1e-12 * std::max(1.0, std::abs(ee));
      if (increment < opt.epsilon && (stationary || stalled)) {
        result.converged = true;
        break;
      }
      prev_l = l;
      prev_p = p;
    }
  } catch (InfeasibleError& err) {
    err.trace = result.trace;
    throw;
  }

  result.l_beams = l;
  result.p_t = p;
  result.ee = ee;
  return result;
}

GridOptimum grid_search_max(const EeProblem& prob, int p_points) {
  prob.validate();
  if (p_points < 2) throw std::invalid_argument("grid_search_max: p_points must be >= 2");
  const double p_min = prob.p_max * 1e-6;
  const double log_lo = std::log(p_min);
  const double log_hi = std::log(prob.p_max);

  GridOptimum best;
  best.ee = -1.0;
  for (int l = 1; l <= prob.l_max; ++l) {
    for (int j = 0; j < p_points; ++j) {
      const double p = std::exp(log_lo + (log_hi - log_lo) * j / (p_points - 1));
      const double ee = ee_objective(prob, l, p);
      if (ee > best.ee) best = GridOptimum{l, p, ee};
    }
  }
  return best;
}

}  // namespace darb
