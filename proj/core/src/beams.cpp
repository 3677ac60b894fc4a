#include "darb/beams.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace darb {

namespace {

BeamMatrix haar_unitary(RngStream& rng, int l) {
  Eigen::MatrixXcd g(l, l);
  for (int r = 0; r < l; ++r)
    for (int c = 0; c < l; ++c) g(r, c) = rng.complex_normal();

  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r_mat = qr.matrixQR();
  // Fix the column phases by sign(R_ii) so the distribution is Haar rather
  // than QR-convention dependent (Mezzadri's correction).
  for (int c = 0; c < l; ++c) {
    const std::complex<double> d = r_mat(c, c);
    const double mag = std::abs(d);
    const std::complex<double> phase = mag > 0.0 ? d / mag : std::complex<double>(1.0, 0.0);
    q.col(c) *= phase;
  }
  return BeamMatrix{std::move(q), BeamMethod::kHaar};
}

BeamMatrix phase_dft_unitary(RngStream& rng, int l) {
  const double inv_sqrt_l = 1.0 / std::sqrt(static_cast<double>(l));
  Eigen::VectorXcd row_phase(l);
  for (int r = 0; r < l; ++r) row_phase(r) = std::polar(1.0, rng.uniform(0.0, 2.0 * M_PI));

  Eigen::MatrixXcd phi(l, l);
  for (int r = 0; r < l; ++r) {
    for (int c = 0; c < l; ++c) {
      const double angle = -2.0 * M_PI * static_cast<double>(r) * static_cast<double>(c) /
                           static_cast<double>(l);
      phi(r, c) = row_phase(r) * std::polar(inv_sqrt_l, angle);
    }
  }
  return BeamMatrix{std::move(phi), BeamMethod::kPhaseDft};
}

}  // namespace

BeamMatrix random_unitary(Seed seed, int l_beams, BeamMethod method) {
  if (l_beams < 1) throw std::invalid_argument("random_unitary: l_beams must be >= 1");
  RngStream rng(seed.sub(stream_tag::kBeam));
  return method == BeamMethod::kHaar ? haar_unitary(rng, l_beams)
                                     : phase_dft_unitary(rng, l_beams);
}

BeamMethod parse_beam_method(const std::string& name) {
  if (name == "haar") return BeamMethod::kHaar;
  if (name == "phase-dft") return BeamMethod::kPhaseDft;
  throw std::invalid_argument("unknown beam method: " + name + " (expected haar|phase-dft)");
}

std::string to_string(BeamMethod method) {
  return method == BeamMethod::kHaar ? "haar" : "phase-dft";
}

}  // namespace darb
