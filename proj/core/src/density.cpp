#include "dyadkde/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dyadkde/error.hpp"
#include "dyadkde/normal.hpp"
#include "dyadkde/variance.hpp"

namespace dyadkde {
namespace {

void check_bandwidth(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error(ErrorCode::NonPositiveBandwidth, "bandwidth must be positive and finite");
  }
}

// Evaluates (1/h) K((w - s)/h), skipping the call outside a compact support.
struct ScaledKernel {
  const KernelSpec& kernel;
  double w;
  double h;
  double cutoff;

  ScaledKernel(const KernelSpec& k, double w_, double h_)
      : kernel(k), w(w_), h(h_),
        cutoff(k.compact() ? h_ * *k.support_radius : std::numeric_limits<double>::infinity()) {}

  double operator()(double s) const noexcept {
    const double d = w - s;
    if (std::fabs(d) > cutoff) return 0.0;
    return kernel(d / h) / h;
  }
};

}  // namespace

double KernelMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_nodes || j >= n_nodes) throw Error(ErrorCode::NodeOutOfRange, "node id out of range");
  if (i == j) throw Error(ErrorCode::SelfLoop, "K_ii is undefined");
  if (i > j) std::swap(i, j);
  return values[triangular_index(i, j, n_nodes)];
}

double KernelMatrix::mean() const noexcept {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

KernelMatrix kernel_matrix(const DyadicSample& sample, double w, double h,
                           const KernelSpec& kernel) {
  check_bandwidth(h);
  const ScaledKernel k(kernel, w, h);
  KernelMatrix out{sample.n_nodes(), h, std::vector<double>(sample.n_dyads())};
  const auto weights = sample.weights();
  for (std::size_t idx = 0; idx < weights.size(); ++idx) out.values[idx] = k(weights[idx]);
  return out;
}

double estimate_density(const DyadicSample& sample, double w, double h,
                        const KernelSpec& kernel) {
  check_bandwidth(h);
  const ScaledKernel k(kernel, w, h);
  double sum = 0.0;
  for (double s : sample.weights()) sum += k(s);
  return sum / static_cast<double>(sample.n_dyads());
}

std::vector<double> estimate_density_grid(const DyadicSample& sample,
                                          std::span<const double> grid, double h,
                                          const KernelSpec& kernel) {
  if (grid.empty()) throw Error(ErrorCode::EmptyGrid, "evaluation grid is empty");
  for (std::size_t g = 1; g < grid.size(); ++g) {
    if (!(grid[g] > grid[g - 1])) {
      throw Error(ErrorCode::UnsortedGrid,
                  "grid must be strictly increasing (position " + std::to_string(g) + ")");
    }
  }
  std::vector<double> out;
  out.reserve(grid.size());
  for (double w : grid) out.push_back(estimate_density(sample, w, h, kernel));
  return out;
}

double conditional_density_at_node(const DyadicSample& sample, std::size_t node, double w,
                                   double h, const KernelSpec& kernel) {
  const std::size_t n = sample.n_nodes();
  if (node >= n) {
    throw Error(ErrorCode::NodeOutOfRange,
                "node " + std::to_string(node) + " out of range for N=" + std::to_string(n));
  }
  check_bandwidth(h);
  const ScaledKernel k(kernel, w, h);
  const auto weights = sample.weights();
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == node) continue;
    const std::size_t idx = node < j ? triangular_index(node, j, n) : triangular_index(j, node, n);
    sum += k(weights[idx]);
  }
  return sum / static_cast<double>(n - 1);
}

DensityFit fit(const KernelMatrix& k, double w, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::InvalidAlpha, "alpha must lie in (0, 1)");
  }
  if (k.n_nodes < 3) {
    throw Error(ErrorCode::TooFewNodes, "variance estimation needs N >= 3");
  }
  const VarianceComponents vc = sigma2_hat(k);
  const double n = static_cast<double>(k.n_dyads());

  DensityFit out;
  out.w = w;
  out.f_hat = k.mean();
  out.h = k.h;
  out.n_nodes = k.n_nodes;
  out.n_dyads = k.n_dyads();
  out.omega1_hat = vc.omega1_hat;
  out.omega2_hat = vc.omega2_hat;
  out.sigma2_hat = vc.sigma2_hat;
  out.clamped = vc.sigma2_hat < 0.0;
  out.se = out.clamped ? 0.0 : std::sqrt(vc.sigma2_hat);
  out.se_iid = std::sqrt(std::max(vc.omega2_hat, 0.0) / (n * k.h));
  out.alpha = alpha;
  const double z = normal_quantile(1.0 - 0.5 * alpha);
  out.ci_low = out.f_hat - z * out.se;
  out.ci_high = out.f_hat + z * out.se;
  return out;
}

DensityFit fit(const DyadicSample& sample, double w, double h, const KernelSpec& kernel,
               double alpha) {
  if (sample.n_nodes() < 3) {
    throw Error(ErrorCode::TooFewNodes, "variance estimation needs N >= 3");
  }
  return fit(kernel_matrix(sample, w, h, kernel), w, alpha);
}

}  // namespace dyadkde
