#pragma once

#include <Eigen/Dense>
#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "darb/rng.hpp"

namespace darb {

// Where the transmitter sits relative to the user square. The corner layout
// puts it at the origin with users drawn from [0, side]^2; the center layout
// draws from [-side/2, side/2]^2.
enum class Geometry { kCornerOrigin, kCenterOrigin };

struct UserLayout {
  std::vector<std::array<double, 2>> positions_m;
  std::vector<double> distances_m;
  std::vector<double> betas;  // large-scale channel gains, dimensionless

  int size() const { return static_cast<int>(betas.size()); }
};

// K complex channel rows of length L; row k has i.i.d. CN(0, beta_k) entries.
struct ChannelRealization {
  Eigen::MatrixXcd h;
};

inline constexpr double kDefaultMinDistanceM = 1.0;

// Large-scale gain 10^-3.53 / d^3.76. Distances below d_min are clamped to
// d_min, which caps the gain at ~2.95e-4.
double path_loss(double distance_m, double d_min_m = kDefaultMinDistanceM);

// K user positions i.i.d. uniform over the square. Draws are keyed per user,
// so layouts for growing K share a common prefix under the same seed.
UserLayout place_users(Seed seed, int k_users, double area_side_m,
                       Geometry geometry = Geometry::kCornerOrigin,
                       double d_min_m = kDefaultMinDistanceM);

// Rayleigh realization for the given layout: entry (k, c) is
// sqrt(beta_k/2) * (g1 + i g2). Rows are keyed per user (prefix-stable in K).
ChannelRealization draw_channels(Seed seed, const UserLayout& layout, int l_beams);

// All-ones gains with no geometry; used for normalized (beta = 1) studies.
UserLayout unit_gain_layout(int k_users);

// CSV round trip, columns: user,x_m,y_m,d_m,beta
void write_layout_csv(std::ostream& out, const UserLayout& layout);
UserLayout read_layout_csv(std::istream& in);
void write_layout_csv_file(const std::string& path, const UserLayout& layout);
UserLayout read_layout_csv_file(const std::string& path);

}  // namespace darb
