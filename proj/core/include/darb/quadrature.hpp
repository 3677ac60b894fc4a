#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace darb {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
};

// Globally adaptive Gauss-Kronrod (G7,K15) on [a, b]: repeatedly bisects the
// interval with the largest local error until the summed error estimate meets
// max(abs_tol, rel_tol * |integral|). Throws QuadratureError with diagnostics
// if max_intervals is exhausted first.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol = 1e-8, double abs_tol = 1e-12,
                                    int max_intervals = 4000);

// Integral over [0, inf) via the substitution x = u/(1-u), du-Jacobian
// 1/(1-u)^2, reduced to integrate_adaptive on [0, 1].
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double rel_tol = 1e-8, double abs_tol = 1e-12,
                                         int max_intervals = 4000);

}  // namespace darb
