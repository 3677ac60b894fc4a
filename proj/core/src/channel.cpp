#include "darb/channel.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace darb {

double path_loss(double distance_m, double d_min_m) {
  if (!(d_min_m > 0.0)) throw std::invalid_argument("path_loss: d_min must be > 0");
  const double d = std::max(distance_m, d_min_m);
  return std::pow(10.0, -3.53) * std::pow(d, -3.76);
}

UserLayout place_users(Seed seed, int k_users, double area_side_m, Geometry geometry,
                       double d_min_m) {
  if (k_users < 1) throw std::invalid_argument("place_users: k_users must be >= 1");
  if (!(area_side_m > 0.0)) throw std::invalid_argument("place_users: area_side_m must be > 0");

  UserLayout layout;
  layout.positions_m.resize(k_users);
  layout.distances_m.resize(k_users);
  layout.betas.resize(k_users);

  const double lo = geometry == Geometry::kCornerOrigin ? 0.0 : -0.5 * area_side_m;
  const double hi = geometry == Geometry::kCornerOrigin ? area_side_m : 0.5 * area_side_m;
  for (int k = 0; k < k_users; ++k) {
    RngStream rng(seed.sub2(stream_tag::kLayout, static_cast<std::uint64_t>(k)));
    const double x = rng.uniform(lo, hi);
    const double y = rng.uniform(lo, hi);
    layout.positions_m[k] = {x, y};
    layout.distances_m[k] = std::hypot(x, y);
    layout.betas[k] = path_loss(layout.distances_m[k], d_min_m);
  }
  return layout;
}

ChannelRealization draw_channels(Seed seed, const UserLayout& layout, int l_beams) {
  if (l_beams < 1) throw std::invalid_argument("draw_channels: l_beams must be >= 1");
  const int k_users = layout.size();
  ChannelRealization real;
  real.h.resize(k_users, l_beams);
  for (int k = 0; k < k_users; ++k) {
    RngStream rng(seed.sub2(stream_tag::kChannel, static_cast<std::uint64_t>(k)));
    const double scale = std::sqrt(layout.betas[k]);
    for (int c = 0; c < l_beams; ++c) {
      real.h(k, c) = scale * rng.complex_normal();
    }
  }
  return real;
}

UserLayout unit_gain_layout(int k_users) {
  if (k_users < 1) throw std::invalid_argument("unit_gain_layout: k_users must be >= 1");
  UserLayout layout;
  layout.positions_m.assign(k_users, {0.0, 0.0});
  layout.distances_m.assign(k_users, 0.0);
  layout.betas.assign(k_users, 1.0);
  return layout;
}

void write_layout_csv(std::ostream& out, const UserLayout& layout) {
  out << "user,x_m,y_m,d_m,beta\n";
  char buf[160];
  for (int k = 0; k < layout.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g\n", k, layout.positions_m[k][0],
                  layout.positions_m[k][1], layout.distances_m[k], layout.betas[k]);
    out << buf;
  }
}

UserLayout read_layout_csv(std::istream& in) {
  UserLayout layout;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("layout csv: empty input");
  if (line.rfind("user,", 0) != 0) throw std::runtime_error("layout csv: unexpected header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::array<double, 4> vals{};
    std::getline(row, cell, ',');  // user index, positional
    for (auto& v : vals) {
      if (!std::getline(row, cell, ',')) throw std::runtime_error("layout csv: short row");
      v = std::stod(cell);
    }
    layout.positions_m.push_back({vals[0], vals[1]});
    layout.distances_m.push_back(vals[2]);
    layout.betas.push_back(vals[3]);
  }
  if (layout.size() == 0) throw std::runtime_error("layout csv: no rows");
  return layout;
}

void write_layout_csv_file(const std::string& path, const UserLayout& layout) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  write_layout_csv(out, layout);
}

UserLayout read_layout_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for read: " + path);
  return read_layout_csv(in);
}

}  // namespace darb
