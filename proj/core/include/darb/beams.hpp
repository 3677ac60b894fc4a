#pragma once

#include <Eigen/Dense>
#include <string>

#include "darb/rng.hpp"

namespace darb {

// How the per-slot random unitary is constructed.
//   kHaar:     QR of an i.i.d. complex Gaussian matrix with the diagonal
//              phase fix, i.e. exactly Haar-distributed.
//   kPhaseDft: (1/sqrt(L)) * diag(e^{j theta_1..L}) * DFT_L with uniform
//              phases; unitary with constant-modulus entries, honoring the
//              phase-only constraint of a reflecting surface.
enum class BeamMethod { kHaar, kPhaseDft };

struct BeamMatrix {
  Eigen::MatrixXcd phi;  // columns are the beams
  BeamMethod method = BeamMethod::kPhaseDft;
};

BeamMatrix random_unitary(Seed seed, int l_beams, BeamMethod method);

BeamMethod parse_beam_method(const std::string& name);  // "haar" | "phase-dft"
std::string to_string(BeamMethod method);

}  // namespace darb
