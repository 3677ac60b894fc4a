#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "darb/analytic.hpp"

namespace darb {

// Constant term used in the transmit-power subproblem denominator.
// kCorrected keeps the surface-assisted system's own circuit terms (so the
// subproblem objective is exactly the EE objective); kPaper substitutes the
// multi-antenna circuit constants, kept selectable for reproduction runs.
enum class CVariant { kCorrected, kPaper };

CVariant parse_c_variant(const std::string& name);  // "corrected" | "paper"
std::string to_string(CVariant v);

struct OptimizerConfig {
  double epsilon = 0.05;          // stop when the EE increment falls below this
  int max_iterations = 50;
  double bisect_rel_tol = 1e-10;  // in the search variable
  double initial_p_t = 0.0;       // <= 0 selects p_max / 2
  CVariant c_variant = CVariant::kCorrected;
};

struct IterationRecord {
  int iteration = 0;
  int l_value = 1;
  double p_t_value = 0.0;
  double ee_value = 0.0;  // spectral EE, bits/s/Hz per watt
};

struct OptimizationResult {
  int l_beams = 1;
  double p_t = 0.0;
  double ee = 0.0;
  std::vector<IterationRecord> trace;
  bool converged = false;
  int iterations = 0;
  bool unimodality_warning = false;
};

// Raised when a subproblem has no feasible point with positive rate. Carries
// the iterations completed before the failure.
struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& what,
                           std::vector<IterationRecord> trace_so_far = {})
      : std::runtime_error(what), trace(std::move(trace_so_far)) {}
  std::vector<IterationRecord> trace;
};

struct P3Result {
  double l_continuous = 1.0;
  int l_integer = 1;
  double ee = 0.0;
  bool unimodal = true;  // integer-grid unimodality witness
};

struct P4Result {
  double p_t = 0.0;
  double ee = 0.0;
};

// Element-count subproblem at fixed transmit power: bisection on the sign of
// the derivative over the relaxed interval, then integer recovery by
// comparing floor/ceil (ties prefer the smaller L).
P3Result solve_p3_elements(const EeProblem& prob, double p_t, const OptimizerConfig& opt);

// Power subproblem at fixed L over (p_lo, p_max], where p_lo is the smallest
// power with a positive rate numerator.
P4Result solve_p4_power(const EeProblem& prob, int l_beams, const OptimizerConfig& opt);

// Alternating optimization: from (L = 1, P = initial), alternate the two
// subproblems until the EE increment drops below epsilon.
OptimizationResult alternating_optimize(const EeProblem& prob, const OptimizerConfig& opt);

struct GridOptimum {
  int l_beams = 1;
  double p_t = 0.0;
  double ee = 0.0;
};

// Exhaustive reference: every integer L times a log-spaced power grid.
GridOptimum grid_search_max(const EeProblem& prob, int p_points = 1000);

}  // namespace darb
