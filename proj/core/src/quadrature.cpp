#include "darb/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace darb {

namespace {

// 15-point Kronrod nodes on [-1, 1] with the embedded 7-point Gauss rule.
// Nonnegative abscissae only; the rule is symmetric.
struct GkNode {
  double x;
  double gauss_w;    // zero for Kronrod-only nodes
  double kronrod_w;
};

constexpr GkNode kNodes[8] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

struct Segment {
  double a, b;
  double value;
  double error;
};

Segment evaluate(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double f0 = f(mid);
  double g7 = kNodes[0].gauss_w * f0;
  double k15 = kNodes[0].kronrod_w * f0;
  double k15_abs = kNodes[0].kronrod_w * std::abs(f0);
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kNodes[i].x;
    const double fp = f(mid + dx);
    const double fm = f(mid - dx);
    g7 += kNodes[i].gauss_w * (fp + fm);
    k15 += kNodes[i].kronrod_w * (fp + fm);
    k15_abs += kNodes[i].kronrod_w * (std::abs(fp) + std::abs(fm));
  }
  g7 *= half;
  k15 *= half;
  k15_abs *= half;

  // Quadpack-style estimate: |K15 - G7| damped to (200 e / scale)^1.5 of the
  // segment's absolute mass, never exceeding that mass.
  const double diff = std::abs(k15 - g7);
  double err = diff;
  if (k15_abs > 0.0 && diff > 0.0) {
    err = k15_abs * std::min(1.0, std::pow(200.0 * diff / k15_abs, 1.5));
  }
  return Segment{a, b, k15, err};
}

struct WorseError {
  bool operator()(const Segment& lhs, const Segment& rhs) const { return lhs.error < rhs.error; }
};

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_tol, int max_intervals) {
  if (!(b > a)) {
    if (a == b) return {0.0, 0.0, 0};
    throw QuadratureError("integrate_adaptive: empty interval (b < a)");
  }

  std::priority_queue<Segment, std::vector<Segment>, WorseError> queue;
  queue.push(evaluate(f, a, b));
  double total = queue.top().value;
  double total_err = queue.top().error;
  int intervals = 1;

  while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (intervals >= max_intervals) {
      throw QuadratureError("integrate_adaptive: did not converge after " +
                            std::to_string(intervals) + " intervals (value=" +
                            std::to_string(total) + ", err=" + std::to_string(total_err) + ")");
    }
    const Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval shrunk to machine resolution; accept what we have.
      queue.push(worst);
      break;
    }
    const Segment left = evaluate(f, worst.a, mid);
    const Segment right = evaluate(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++intervals;
  }

  if (!std::isfinite(total)) {
    throw QuadratureError("integrate_adaptive: non-finite integral estimate");
  }
  return {total, total_err, intervals};
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double rel_tol,
                                         double abs_tol, int max_intervals) {
  auto mapped = [&f](double u) {
    if (u >= 1.0) return 0.0;
    const double one_minus = 1.0 - u;
    const double x = u / one_minus;
    const double fx = f(x);
    if (fx == 0.0) return 0.0;
    return fx / (one_minus * one_minus);
  };
  return integrate_adaptive(mapped, 0.0, 1.0, rel_tol, abs_tol, max_intervals);
}

}  // namespace darb
