#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "dyadkde/density.hpp"
#include "dyadkde/error.hpp"
#include "dyadkde/normal.hpp"
#include "dyadkde/numeric.hpp"
#include "oracles.hpp"

using namespace dyadkde;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected dyadkde::Error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("estimate_density examples") {
  const DyadicSample one(2, {0.7});
  CHECK(estimate_density(one, 0.7, 1.0, gaussian()) == doctest::Approx(0.3989423).epsilon(1e-7));

  const double w = 0.4;
  const double h = 0.3;
  const DyadicSample far(3, {w + 10 * h, w + 10 * h, w + 10 * h});
  CHECK(estimate_density(far, w, h, epanechnikov()) == 0.0);

  std::mt19937_64 gen(8);
  const auto s = oracle::random_sample(8, gen);
  for (const auto& k : {gaussian(), epanechnikov()}) {
    for (double x : {-1.0, 0.0, 0.25, 1.7}) {
      CHECK(relative_difference(estimate_density(s, x, 0.6, k), oracle::density(s, x, 0.6, k.name)) <
            1e-13);
    }
  }
  CHECK(code_of([&] { estimate_density(s, 0.0, 0.0, gaussian()); }) ==
        ErrorCode::NonPositiveBandwidth);
  CHECK(code_of([&] { estimate_density(s, 0.0, -0.1, gaussian()); }) ==
        ErrorCode::NonPositiveBandwidth);
}

TEST_CASE("estimate_density_grid") {
  std::mt19937_64 gen(6);
  const auto s = oracle::random_sample(6, gen);
  const std::vector<double> single{0.3};
  CHECK(estimate_density_grid(s, single, 0.5, gaussian())[0] ==
        estimate_density(s, 0.3, 0.5, gaussian()));

  std::vector<double> grid(11);
  for (std::size_t g = 0; g < grid.size(); ++g) grid[g] = -2.0 + 0.4 * static_cast<double>(g);
  const auto values = estimate_density_grid(s, grid, 0.5, epanechnikov());
  REQUIRE(values.size() == 11);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    CHECK(values[g] == estimate_density(s, grid[g], 0.5, epanechnikov()));
    CHECK(relative_difference(values[g], oracle::density(s, grid[g], 0.5, "epanechnikov")) < 1e-13);
  }

  const std::vector<double> tie{1.0, 1.0};
  const std::vector<double> down{1.0, 0.5};
  const std::vector<double> empty;
  CHECK(code_of([&] { estimate_density_grid(s, tie, 0.5, gaussian()); }) == ErrorCode::UnsortedGrid);
  CHECK(code_of([&] { estimate_density_grid(s, down, 0.5, gaussian()); }) == ErrorCode::UnsortedGrid);
  CHECK(code_of([&] { estimate_density_grid(s, empty, 0.5, gaussian()); }) == ErrorCode::EmptyGrid);
}

TEST_CASE("conditional_density_at_node") {
  const DyadicSample two(2, {0.2});
  CHECK(conditional_density_at_node(two, 0, 0.0, 0.5, gaussian()) ==
        estimate_density(two, 0.0, 0.5, gaussian()));

  std::mt19937_64 gen(7);
  const auto s = oracle::random_sample(7, gen);
  CHECK(relative_difference(conditional_density_at_node(s, 3, 0.1, 0.4, gaussian()),
                            oracle::conditional(s, 3, 0.1, 0.4, "gaussian")) < 1e-13);
  CHECK(code_of([&] { conditional_density_at_node(s, 7, 0.1, 0.4, gaussian()); }) ==
        ErrorCode::NodeOutOfRange);
}

TEST_CASE("node average of conditional densities recovers the estimate") {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 30;
    const auto s = oracle::random_sample(n, gen);
    const auto k = trial % 2 ? gaussian() : epanechnikov();
    const double w = -1.0 + 0.05 * trial;
    const double h = 0.2 + 0.03 * trial;
    double avg = 0.0;
    for (std::size_t i = 0; i < n; ++i) avg += conditional_density_at_node(s, i, w, h, k);
    avg /= static_cast<double>(n);
    CHECK(relative_difference(avg, estimate_density(s, w, h, k)) < 1e-12);
  }
}

TEST_CASE("permutation, location and scale properties") {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 3 + trial % 12;
    const auto s = oracle::random_sample(n, gen);
    const auto k = trial % 2 ? gaussian() : epanechnikov();
    const double w = 0.3;
    const double h = 0.7;

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    const auto f = estimate_density(s, w, h, k);
    // Summation order changes under relabeling; agreement is to rounding.
    CHECK(relative_difference(estimate_density(s.relabeled(perm), w, h, k), f) < 1e-13);

    const double shift = 3.25;
    CHECK(relative_difference(estimate_density(s.affine(1.0, shift), w + shift, h, k), f) < 1e-12);

    const double c = 2.5;
    CHECK(relative_difference(estimate_density(s.affine(c, 0.0), c * w, c * h, k), f / c) < 1e-12);
  }
}

TEST_CASE("degenerate attributes reduce to a monadic estimate over the dyad values") {
  std::mt19937_64 gen(31);
  const auto s = oracle::random_sample(12, gen);
  const auto values = s.weights();
  const double h = 0.4;
  for (double w : {-0.5, 0.0, 0.8}) {
    double monadic = 0.0;
    for (double v : values) monadic += std::exp(-0.5 * ((w - v) / h) * ((w - v) / h));
    monadic /= static_cast<double>(values.size()) * h * std::sqrt(2.0 * M_PI);
    CHECK(relative_difference(estimate_density(s, w, h, gaussian()), monadic) < 1e-13);
  }
}

TEST_CASE("fit populates a consistent DensityFit") {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 15;
    const auto s = oracle::random_sample(n, gen);
    const auto k = trial % 2 ? gaussian() : epanechnikov();
    const auto f = fit(s, 0.2, 0.8, k, 0.05);
    const double nd = static_cast<double>(f.n_dyads);
    const double recomposed =
        f.omega2_hat / (nd * f.h) + 2.0 * (static_cast<double>(f.n_nodes) - 2.0) / nd * f.omega1_hat;
    CHECK(relative_difference(f.sigma2_hat, recomposed) < 1e-12);
    if (!f.clamped) CHECK(relative_difference(f.se * f.se, recomposed) < 1e-12);
    CHECK(f.f_hat >= 0.0);
    CHECK(f.ci_low <= f.f_hat);
    CHECK(f.f_hat <= f.ci_high);
    CHECK(relative_difference(f.ci_high, f.f_hat + normal_quantile(0.975) * f.se) < 1e-14);
    CHECK(relative_difference(f.ci_low, f.f_hat - normal_quantile(0.975) * f.se) < 1e-14);
    CHECK(relative_difference(f.se_iid, std::sqrt(f.omega2_hat / (nd * f.h))) < 1e-15);
    CHECK(f.n_dyads == dyad_count(n));
  }
}

TEST_CASE("fit edge cases") {
  // Identical weights: every K_ij equals f_hat up to rounding in the mean, so
  // both variance parts vanish.
  const DyadicSample flat(4, std::vector<double>(6, 0.3));
  const auto f = fit(flat, 0.0, 0.5, gaussian(), 0.05);
  CHECK(f.se < 1e-14 * f.f_hat);
  CHECK(f.ci_low == doctest::Approx(f.f_hat).epsilon(1e-14));
  CHECK(f.ci_high == doctest::Approx(f.f_hat).epsilon(1e-14));

  const DyadicSample two(2, {0.1});
  CHECK(code_of([&] { fit(two, 0.0, 0.5, gaussian(), 0.05); }) == ErrorCode::TooFewNodes);
  CHECK(code_of([&] { fit(flat, 0.0, 0.5, gaussian(), 0.0); }) == ErrorCode::InvalidAlpha);
  CHECK(code_of([&] { fit(flat, 0.0, 0.5, gaussian(), 1.0); }) == ErrorCode::InvalidAlpha);
}

TEST_CASE("negative variance estimates are clamped and flagged") {
  // K4 with mass only on the matching {0,1}, {2,3}. The centered terms sum to
  // zero, so the share-a-node sum equals minus the sum over disjoint pairs,
  // and every disjoint pair here has same-signed terms.
  const double w = 0.0;
  const DyadicSample s(4, {w, 50.0, 50.0, 50.0, 50.0, w});
  const auto f = fit(s, w, 0.5, epanechnikov(), 0.05);
  CHECK(f.sigma2_hat < 0.0);
  CHECK(f.clamped);
  CHECK(f.se == 0.0);
  CHECK(f.ci_low == f.f_hat);
  CHECK(f.ci_high == f.f_hat);
  CHECK(f.se_iid > 0.0);
}
