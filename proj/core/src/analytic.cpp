#include "darb/analytic.hpp"

#include <cmath>
#include <vector>

#include "darb/quadrature.hpp"

namespace darb {

namespace {

// exp(-L g / rho - e * log1p(g)), the survival-style kernel shared by the
// CDF and the density; computed in one exp to stay finite for huge g.
double kernel(double gamma, double l, double rho, double e) {
  return std::exp(-l * gamma / rho - e * std::log1p(gamma));
}

}  // namespace

double sinr_cdf(double gamma, const LinkStats& stats) {
  stats.validate();
  if (gamma < 0.0) throw std::invalid_argument("sinr_cdf: gamma must be >= 0");
  const double l = static_cast<double>(stats.l_beams);
  const double x = l * gamma / stats.snr_eff + (l - 1.0) * std::log1p(gamma);
  return -std::expm1(-x);
}

double selected_sinr_pdf(double gamma, const LinkStats& stats) {
  stats.validate();
  if (gamma < 0.0) throw std::invalid_argument("selected_sinr_pdf: gamma must be >= 0");
  const double l = static_cast<double>(stats.l_beams);
  const double rho = stats.snr_eff;
  const double base = kernel(gamma, l, rho, l);
  if (base == 0.0) return 0.0;
  const double bracket = (l / rho) * (1.0 + gamma) + (l - 1.0);
  const double cdf_pow = stats.k_users == 1
                             ? 1.0
                             : std::pow(sinr_cdf(gamma, stats), stats.k_users - 1);
  return static_cast<double>(stats.k_users) * base * bracket * cdf_pow;
}

double best_sinr_cdf(double alpha, const LinkStats& stats) {
  stats.validate();
  if (alpha < 0.0) throw std::invalid_argument("best_sinr_cdf: alpha must be >= 0");
  if (alpha == 0.0) return 0.0;

  const int l = stats.l_beams;
  const double ld = static_cast<double>(l);
  const double noise = ld / stats.snr_eff;  // L / rho term in the SINR denominator
  const double c = alpha / (1.0 + alpha);

  // Conditioned on the channel norm s = sum_i z_i, the projection powers are
  // s * Dirichlet(1,...,1), and all beams stay below alpha iff every
  // component of the Dirichlet vector is <= t(s) = c (s + noise) / s. The
  // max-spacing volume gives the inner probability in closed form.
  std::vector<double> binom(l + 1, 1.0);
  for (int j = 1; j <= l; ++j) binom[j] = binom[j - 1] * (l - j + 1) / j;

  auto max_component_cdf = [&](double t) {
    if (t >= 1.0) return 1.0;
    if (t <= 0.0) return 0.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 0; j <= l && j * t < 1.0; ++j) {
      sum += sign * binom[j] * std::pow(1.0 - j * t, l - 1);
      sign = -sign;
    }
    return std::min(std::max(sum, 0.0), 1.0);
  };

  double log_gamma_l = 0.0;  // log (L-1)!
  for (int j = 2; j < l; ++j) log_gamma_l += std::log(static_cast<double>(j));

  auto integrand = [&](double s) {
    if (s <= 0.0) return 0.0;
    const double pdf = std::exp((ld - 1.0) * std::log(s) - s - log_gamma_l);
    if (pdf == 0.0) return 0.0;
    return pdf * max_component_cdf(c * (s + noise) / s);
  };
  return integrate_semi_infinite(integrand, 1e-10, 1e-14).value;
}

double sum_rate_integral(const LinkStats& stats) {
  stats.validate();
  auto integrand = [&stats](double gamma) {
    const double f = selected_sinr_pdf(gamma, stats);
    if (f == 0.0) return 0.0;
    return std::log2(1.0 + gamma) * f;
  };
  const auto q = integrate_semi_infinite(integrand, 1e-8, 1e-12);
  return static_cast<double>(stats.l_beams) * q.value;
}

double sum_rate_asymptotic(const LinkStats& stats, double beta, InnerLog inner,
                           bool* negative_rate) {
  stats.validate();
  if (stats.k_users <= 1) throw std::domain_error("sum_rate_asymptotic: k_users must be > 1");
  if (!(beta > 0.0)) throw std::invalid_argument("sum_rate_asymptotic: beta must be > 0");
  const double l = static_cast<double>(stats.l_beams);
  const double log_k = inner == InnerLog::kNatural
                           ? std::log(static_cast<double>(stats.k_users))
                           : std::log2(static_cast<double>(stats.k_users));
  const double p_over_l_sigma2 = stats.snr_eff / (beta * l);  // P_T / (L sigma2)
  const double rate = l * std::log2(beta * log_k) + l * std::log2(p_over_l_sigma2);
  if (negative_rate != nullptr) *negative_rate = rate < 0.0;
  return rate;
}

double tfs_sum_rate(const LinkStats& stats, double alpha) {
  stats.validate();
  if (alpha < 0.0) throw std::invalid_argument("tfs_sum_rate: alpha must be >= 0");
  const double keep = alpha == 0.0
                          ? 1.0
                          : 1.0 - std::pow(sinr_cdf(alpha, stats), stats.k_users);
  return keep * sum_rate_integral(stats);
}

double ee_denominator(const EeProblem& prob, double l_beams, double p_t) {
  const double static_part =
      prob.pm.p_fpga + prob.pm.p_a + prob.pm.p_sr + static_cast<double>(prob.k_users) * prob.pm.p_uk;
  return p_t / prob.pm.eta_t + l_beams * l_beams * prob.pm.p_pin + l_beams * prob.pm.p_u +
         static_part;
}

double ee_objective(const EeProblem& prob, double l_beams, double p_t, bool* rate_clamped) {
  prob.validate();
  if (!(p_t > 0.0)) throw std::domain_error("ee_objective: p_t must be > 0");
  if (!(l_beams >= 1.0)) throw std::invalid_argument("ee_objective: l_beams must be >= 1");

  const double log_k = prob.inner_log == InnerLog::kNatural
                           ? std::log(static_cast<double>(prob.k_users))
                           : std::log2(static_cast<double>(prob.k_users));
  double rate = l_beams * std::log2(prob.beta * log_k) +
                l_beams * std::log2(p_t / (l_beams * prob.sigma2));
  const bool clamped = rate < 0.0;
  if (clamped) rate = 0.0;
  if (rate_clamped != nullptr) *rate_clamped = clamped;
  return rate / ee_denominator(prob, l_beams, p_t);
}

}  // namespace darb
