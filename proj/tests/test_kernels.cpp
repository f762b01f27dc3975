#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dyadkde/error.hpp"
#include "dyadkde/kernel.hpp"
#include "dyadkde/numeric.hpp"

using namespace dyadkde;

TEST_CASE("epanechnikov values and constants") {
  const auto k = epanechnikov();
  CHECK(k(0.0) == 0.75);
  CHECK(k(2.0) == 0.0);
  CHECK(k(1.0) == 0.0);
  CHECK(k(0.5) == doctest::Approx(0.5625));
  CHECK(k.kappa2 == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(k.r2 == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(k.bound == 0.75);
  REQUIRE(k.support_radius.has_value());
  CHECK(*k.support_radius == 1.0);
}

TEST_CASE("gaussian values and constants") {
  const auto k = gaussian();
  CHECK(k(0.0) == doctest::Approx(0.3989423).epsilon(1e-7));
  CHECK(k.kappa2 == 1.0);
  CHECK(k.r2 == doctest::Approx(0.2820948).epsilon(1e-7));
  CHECK(k.r2 == doctest::Approx(1.0 / (2.0 * std::sqrt(std::numbers::pi))).epsilon(1e-15));
  CHECK(k.bound == doctest::Approx(0.3989423).epsilon(1e-7));
  CHECK_FALSE(k.support_radius.has_value());
  CHECK(k.effective_radius() == 8.0);
}

TEST_CASE("kernel_by_name") {
  CHECK(kernel_by_name("gaussian").name == "gaussian");
  CHECK(kernel_by_name("epanechnikov").name == "epanechnikov");
  CHECK_THROWS_AS(kernel_by_name("triangular"), Error);
}

TEST_CASE("scaled_eval") {
  const auto g = gaussian();
  CHECK(scaled_eval(g, 1.3, 1.3, 1.0) == doctest::Approx(0.3989423).epsilon(1e-7));
  CHECK(scaled_eval(g, 1.3, 1.3, 0.5) == doctest::Approx(0.7978846).epsilon(1e-7));
  CHECK(scaled_eval(epanechnikov(), 0.0, -0.6, 0.3) == 0.0);
  CHECK(scaled_eval(epanechnikov(), 0.0, 0.15, 0.3) ==
        doctest::Approx(0.75 * (1.0 - 0.25) / 0.3));
  try {
    scaled_eval(g, 0.0, 0.0, 0.0);
    FAIL("expected NonPositiveBandwidth");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveBandwidth);
  }
  CHECK_THROWS_AS(scaled_eval(g, 0.0, 0.0, -1.0), Error);
}

TEST_CASE("kernel contracts hold under quadrature") {
  for (const auto& k : {epanechnikov(), gaussian()}) {
    CAPTURE(k.name);
    const double r = k.effective_radius();
    const double mass = integrate_simpson([&](double u) { return k(u); }, -r, r);
    const double m2 = integrate_simpson([&](double u) { return u * u * k(u); }, -r, r);
    const double sq = integrate_simpson([&](double u) { return k(u) * k(u); }, -r, r);
    CHECK(std::fabs(mass - 1.0) < 1e-10);
    CHECK(std::fabs(m2 - k.kappa2) < 1e-8);
    CHECK(std::fabs(sq - k.r2) < 1e-8);
    for (double u = -10.0; u <= 10.0; u += 0.01) {
      CHECK(k(u) == k(-u));
      CHECK(k(u) <= k.bound);
      CHECK(k(u) >= 0.0);
    }
    if (k.compact()) {
      CHECK(k(*k.support_radius + 1e-9) == 0.0);
      CHECK(k(-*k.support_radius - 1e-9) == 0.0);
    }
  }
}
