#pragma once

#include <string>
#include <string_view>

#include "dyadkde/dyadic_sample.hpp"
#include "dyadkde/kernel.hpp"

namespace dyadkde {

enum class BandwidthRule {
  //! Plug-in h* from user-supplied Omega2 and B.
  MseOracle,
  //! c * n^{-1/5} * n^{-epsilon}: slightly faster than the MSE-optimal rate.
  Undersmooth,
  //! c / N: both variance terms survive in the limit.
  KnifeEdge,
};

BandwidthRule bandwidth_rule_by_name(std::string_view name);
std::string_view to_string(BandwidthRule rule) noexcept;

struct BandwidthChoice {
  BandwidthRule rule;
  double h = 0.0;
  //! Scale constant actually used (normal-reference c, or h* itself for the oracle).
  double constant = 0.0;
  double epsilon = 0.0;
};

inline constexpr double kUndersmoothEpsilon = 0.01;

//! sigma * [8 sqrt(pi) R(K) / (3 kappa2^2)]^{1/5}, with sigma the standard
//! deviation of the dyad weights. For the Gaussian kernel this is the
//! familiar 1.06 sigma multiplier.
double normal_reference_constant(const DyadicSample& sample, const KernelSpec& kernel);

BandwidthChoice undersmooth_bandwidth(const DyadicSample& sample, const KernelSpec& kernel,
                                      double epsilon = kUndersmoothEpsilon);
BandwidthChoice knife_edge_bandwidth(const DyadicSample& sample, const KernelSpec& kernel);
BandwidthChoice mse_oracle_bandwidth(const DyadicSample& sample, double omega2, double b);

}  // namespace dyadkde
