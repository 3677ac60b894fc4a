#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "darb/beams.hpp"
#include "test_support.hpp"

using namespace darb;

namespace {
double unitarity_residual(const Eigen::MatrixXcd& phi) {
  const auto l = phi.cols();
  return (phi.adjoint() * phi - Eigen::MatrixXcd::Identity(l, l)).norm();
}
}  // namespace

TEST_CASE("single-element phase matrix") {
  const auto b = random_unitary(Seed{3, 0}, 1, BeamMethod::kPhaseDft);
  REQUIRE(b.phi.rows() == 1);
  CHECK(std::abs(b.phi(0, 0)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("unitarity for both constructions") {
  for (int l : {1, 2, 3, 5, 8, 16, 20}) {
    for (auto method : {BeamMethod::kHaar, BeamMethod::kPhaseDft}) {
      for (std::uint64_t s = 0; s < 3; ++s) {
        const auto b = random_unitary(Seed{100 + s, s}, l, method);
        CHECK(unitarity_residual(b.phi) < 1e-10);
      }
    }
  }
}

TEST_CASE("phase-dft entries have constant modulus") {
  for (int l : {2, 4, 9, 18}) {
    const auto b = random_unitary(Seed{8, 0}, l, BeamMethod::kPhaseDft);
    const double expected = 1.0 / std::sqrt(static_cast<double>(l));
    for (int r = 0; r < l; ++r)
      for (int c = 0; c < l; ++c) CHECK(std::abs(b.phi(r, c)) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("haar first column marginal is Beta(1, L-1)") {
  // |phi_1[0]|^2 of a Haar column on C^4 has CDF 1 - (1-x)^3.
  const int n = 100000;
  std::vector<double> xs(n);
  const Seed seed{21, 0};
  for (int t = 0; t < n; ++t) {
    const auto b = random_unitary(seed.sub(t), 4, BeamMethod::kHaar);
    xs[t] = std::norm(b.phi(0, 0));
  }
  const double ks = test::ks_statistic(xs, [](double x) {
    if (x <= 0) return 0.0;
    if (x >= 1) return 1.0;
    return 1.0 - std::pow(1.0 - x, 3);
  });
  CHECK(ks < 0.01);
}

TEST_CASE("determinism and method parsing") {
  const auto a = random_unitary(Seed{5, 9}, 6, BeamMethod::kHaar);
  const auto b = random_unitary(Seed{5, 9}, 6, BeamMethod::kHaar);
  CHECK(a.phi == b.phi);
  CHECK(parse_beam_method("haar") == BeamMethod::kHaar);
  CHECK(parse_beam_method("phase-dft") == BeamMethod::kPhaseDft);
  CHECK_THROWS_AS(parse_beam_method("qr"), std::invalid_argument);
  CHECK(to_string(BeamMethod::kHaar) == "haar");
}
