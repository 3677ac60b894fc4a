#pragma once

#include <Eigen/Dense>

#include "darb/beams.hpp"
#include "darb/channel.hpp"

namespace darb {

// gamma(k, i): SINR of user k on beam i, all entries >= 0 and finite.
struct SinrTable {
  Eigen::MatrixXd gamma;

  int users() const { return static_cast<int>(gamma.rows()); }
  int beams() const { return static_cast<int>(gamma.cols()); }
};

// gamma(k,i) = |h_k^T phi_i|^2 / (sum_{l != i} |h_k^T phi_l|^2 + L sigma2 / p_t),
// the equal-power-per-beam SINR. Throws std::domain_error unless p_t > 0 and
// sigma2 > 0.
SinrTable compute_sinr(const ChannelRealization& h, const BeamMatrix& phi, double p_t,
                       double sigma2);

}  // namespace darb
