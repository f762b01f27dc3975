#include "dyadkde/bandwidth.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dyadkde/design.hpp"
#include "dyadkde/error.hpp"

namespace dyadkde {

BandwidthRule bandwidth_rule_by_name(std::string_view name) {
  if (name == "mse-oracle") return BandwidthRule::MseOracle;
  if (name == "undersmooth") return BandwidthRule::Undersmooth;
  if (name == "knife-edge") return BandwidthRule::KnifeEdge;
  throw Error(ErrorCode::InvalidArgument,
              "unknown bandwidth rule `" + std::string(name) +
                  "` (expected mse-oracle, undersmooth or knife-edge)");
}

std::string_view to_string(BandwidthRule rule) noexcept {
  switch (rule) {
    case BandwidthRule::MseOracle: return "mse-oracle";
    case BandwidthRule::Undersmooth: return "undersmooth";
    case BandwidthRule::KnifeEdge: return "knife-edge";
  }
  return "unknown";
}

double normal_reference_constant(const DyadicSample& sample, const KernelSpec& kernel) {
  const auto w = sample.weights();
  double mean = 0.0;
  for (double v : w) mean += v;
  mean /= static_cast<double>(w.size());
  double ss = 0.0;
  for (double v : w) ss += (v - mean) * (v - mean);
  const double denom = w.size() > 1 ? static_cast<double>(w.size() - 1) : 1.0;
  const double sd = std::sqrt(ss / denom);
  if (!(sd > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "dyad weights have zero spread; a normal-reference bandwidth is undefined");
  }
  const double factor = 8.0 * std::sqrt(std::numbers::pi) * kernel.r2 /
                        (3.0 * kernel.kappa2 * kernel.kappa2);
  return sd * std::pow(factor, 0.2);
}

BandwidthChoice undersmooth_bandwidth(const DyadicSample& sample, const KernelSpec& kernel,
                                      double epsilon) {
  const double c = normal_reference_constant(sample, kernel);
  const double n = static_cast<double>(sample.n_dyads());
  return {BandwidthRule::Undersmooth, c * std::pow(n, -0.2 - epsilon), c, epsilon};
}

BandwidthChoice knife_edge_bandwidth(const DyadicSample& sample, const KernelSpec& kernel) {
  const double c = normal_reference_constant(sample, kernel);
  return {BandwidthRule::KnifeEdge, c / static_cast<double>(sample.n_nodes()), c, 0.0};
}

BandwidthChoice mse_oracle_bandwidth(const DyadicSample& sample, double omega2, double b) {
  const double h = mse_optimal_bandwidth(omega2, b, sample.n_dyads());
  return {BandwidthRule::MseOracle, h, h, 0.0};
}

}  // namespace dyadkde
