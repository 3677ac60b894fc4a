#include <doctest.h>

#include <vector>

#include "darb/rng.hpp"
#include "test_support.hpp"

using namespace darb;

TEST_CASE("streams are deterministic and distinct") {
  RngStream a(Seed{7, 3});
  RngStream b(Seed{7, 3});
  RngStream c(Seed{7, 4});
  bool any_diff = false;
  for (int i = 0; i < 64; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    if (x != c.next_u64()) any_diff = true;
  }
  CHECK(any_diff);
}

TEST_CASE("sub derivation is stable") {
  const Seed s{123, 0};
  CHECK(s.sub(5) == s.sub(5));
  CHECK(s.sub(5) != s.sub(6));
  CHECK(s.sub2(1, 2) == s.sub(1).sub(2));
  CHECK(s.sub2(1, 2) != s.sub2(2, 1));
}

TEST_CASE("uniform01 moments") {
  RngStream rng(Seed{42, 0});
  const int n = 100000;
  std::vector<double> xs(n);
  for (auto& x : xs) {
    x = rng.uniform01();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(test::mean(xs) == doctest::Approx(0.5).epsilon(0.01));
  CHECK(test::variance(xs) == doctest::Approx(1.0 / 12.0).epsilon(0.02));
}

TEST_CASE("normal moments") {
  RngStream rng(Seed{43, 0});
  const int n = 100000;
  std::vector<double> xs(n);
  for (auto& x : xs) x = rng.normal();
  CHECK(test::mean(xs) == doctest::Approx(0.0).epsilon(1.0));
  CHECK(std::abs(test::mean(xs)) < 0.02);
  CHECK(test::variance(xs) == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("complex normal has unit variance split across parts") {
  RngStream rng(Seed{44, 0});
  const int n = 100000;
  std::vector<double> re(n), im(n), mag2(n);
  for (int i = 0; i < n; ++i) {
    const auto z = rng.complex_normal();
    re[i] = z.real();
    im[i] = z.imag();
    mag2[i] = std::norm(z);
  }
  CHECK(test::variance(re) == doctest::Approx(0.5).epsilon(0.03));
  CHECK(test::variance(im) == doctest::Approx(0.5).epsilon(0.03));
  CHECK(test::mean(mag2) == doctest::Approx(1.0).epsilon(0.02));
}
