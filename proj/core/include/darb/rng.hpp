#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace darb {

namespace detail {

// SplitMix64 finalizer (Steele/Lea/Flood), used for seeding and stream
// derivation only.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

// Reproducibility handle: (root, stream) fully determines a draw sequence.
// Child streams are derived by hashing indices into `stream` with SplitMix64,
// so e.g. per-trial and per-user streams never overlap and do not depend on
// how many draws sibling streams consumed. Bit-exactness is a contract of
// this implementation, not across libraries.
struct Seed {
  std::uint64_t root = 0;
  std::uint64_t stream = 0;

  constexpr Seed sub(std::uint64_t index) const {
    return Seed{root, detail::mix64(stream ^ (0x9e3779b97f4a7c15ULL + index * 0xbf58476d1ce4e5b9ULL))};
  }
  constexpr Seed sub2(std::uint64_t a, std::uint64_t b) const { return sub(a).sub(b); }

  friend constexpr bool operator==(const Seed&, const Seed&) = default;
};

// Well-known substream tags so call sites stay collision-free by convention.
namespace stream_tag {
inline constexpr std::uint64_t kLayout = 0x4c41;
inline constexpr std::uint64_t kChannel = 0x4348;
inline constexpr std::uint64_t kBeam = 0x4245;
inline constexpr std::uint64_t kTrial = 0x5452;
inline constexpr std::uint64_t kInstance = 0x494e;
}  // namespace stream_tag

// xoshiro256++ (Blackman & Vigna), seeded from (root, stream) via SplitMix64.
// Uniform doubles use the top 53 bits; normals use Box-Muller with a cached
// spare, so one complex Gaussian costs exactly two uniforms.
class RngStream {
 public:
  explicit RngStream(Seed seed) {
    std::uint64_t x = detail::mix64(seed.root) ^ detail::mix64(~seed.stream);
    for (auto& w : state_) {
      x = detail::mix64(x);
      w = x;
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = detail::rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl(state_[3], 45);
    return result;
  }

  // [0, 1)
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // (0, 1], safe as a log argument
  double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // CN(0, 1): unit-variance circularly symmetric complex Gaussian.
  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
  }

 private:
  std::array<std::uint64_t, 4> state_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace darb
