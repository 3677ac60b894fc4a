#include "darb/sinr.hpp"

#include <stdexcept>

namespace darb {

SinrTable compute_sinr(const ChannelRealization& h, const BeamMatrix& phi, double p_t,
                       double sigma2) {
  if (!(p_t > 0.0)) throw std::domain_error("compute_sinr: p_t must be > 0");
  if (!(sigma2 > 0.0)) throw std::domain_error("compute_sinr: sigma2 must be > 0");
  const auto l = phi.phi.rows();
  if (h.h.cols() != l) throw std::invalid_argument("compute_sinr: channel/beam dimension mismatch");

  // Row k of h * phi is (h_k^T phi_1, ..., h_k^T phi_L), an unconjugated
  // dot product per beam.
  const Eigen::MatrixXd proj_power = (h.h * phi.phi).cwiseAbs2();
  const Eigen::VectorXd row_sum = proj_power.rowwise().sum();
  const double noise = static_cast<double>(l) * sigma2 / p_t;

  SinrTable table;
  table.gamma.resize(proj_power.rows(), proj_power.cols());
  for (Eigen::Index k = 0; k < proj_power.rows(); ++k) {
    for (Eigen::Index i = 0; i < proj_power.cols(); ++i) {
      const double signal = proj_power(k, i);
      const double interference = row_sum(k) - signal;
      table.gamma(k, i) = signal / (interference + noise);
    }
  }
  return table;
}

}  // namespace darb
