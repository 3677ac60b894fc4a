#include <doctest.h>

#include <cmath>

#include "darb/quadrature.hpp"

using namespace darb;

TEST_CASE("polynomial and trig integrals") {
  CHECK(integrate_adaptive([](double x) { return x * x; }, 0, 1).value ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0, M_PI).value ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK(integrate_adaptive([](double) { return 1.0; }, 2, 2).value == 0.0);
}

TEST_CASE("sharp peak requires subdivision") {
  const auto r = integrate_adaptive([](double x) { return std::exp(-1000.0 * (x - 0.5) * (x - 0.5)); },
                                    0, 1, 1e-10);
  CHECK(r.value == doctest::Approx(std::sqrt(M_PI / 1000.0)).epsilon(1e-8));
  CHECK(r.intervals > 1);
}

TEST_CASE("semi-infinite integrals") {
  CHECK(integrate_semi_infinite([](double x) { return std::exp(-x); }).value ==
        doctest::Approx(1.0).epsilon(1e-8));
  CHECK(integrate_semi_infinite([](double x) { return x * std::exp(-x); }).value ==
        doctest::Approx(1.0).epsilon(1e-8));
  CHECK(integrate_semi_infinite([](double x) { return std::exp(-x * x); }).value ==
        doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-8));
}

TEST_CASE("interval budget exhaustion throws with diagnostics") {
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::sin(300.0 * x); }, 0, 50, 1e-14,
                                     1e-300, 8),
                  QuadratureError);
}

TEST_CASE("halving the tolerance stays within the reported error") {
  auto f = [](double x) { return std::log1p(x) * std::exp(-0.7 * x); };
  const auto coarse = integrate_semi_infinite(f, 1e-6, 1e-12);
  const auto fine = integrate_semi_infinite(f, 5e-7, 1e-12);
  CHECK(std::abs(coarse.value - fine.value) <= coarse.error_estimate + 1e-15);
}
