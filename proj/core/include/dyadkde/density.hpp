#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dyadkde/dyadic_sample.hpp"
#include "dyadkde/kernel.hpp"

namespace dyadkde {

//! K_ij = (1/h) K((w - W_ij) / h) for every dyad, in the sample's
//! upper-triangular order. Shared input of the density and variance routines.
struct KernelMatrix {
  std::size_t n_nodes = 0;
  double h = 0.0;
  std::vector<double> values;

  std::size_t n_dyads() const noexcept { return values.size(); }
  double at(std::size_t i, std::size_t j) const;
  //! f_hat: the plain average of the K_ij.
  double mean() const noexcept;
};

//! Throws NonPositiveBandwidth unless h > 0. Compact kernels skip the
//! evaluation for |w - W_ij| > h * support_radius.
KernelMatrix kernel_matrix(const DyadicSample& sample, double w, double h,
                           const KernelSpec& kernel);

//! Dyadic kernel density estimate (1/n) sum_{i<j} (1/h) K((w - W_ij)/h).
double estimate_density(const DyadicSample& sample, double w, double h,
                        const KernelSpec& kernel);

//! Point estimates on a nonempty, strictly increasing grid.
//! Throws EmptyGrid / UnsortedGrid.
std::vector<double> estimate_density_grid(const DyadicSample& sample,
                                          std::span<const double> grid, double h,
                                          const KernelSpec& kernel);

//! (1/(N-1)) sum_{j != node} K_{node,j}. Averaging over all nodes gives back
//! estimate_density.
double conditional_density_at_node(const DyadicSample& sample, std::size_t node, double w,
                                   double h, const KernelSpec& kernel);

struct DensityFit {
  double w = 0.0;
  double f_hat = 0.0;
  double h = 0.0;
  std::size_t n_nodes = 0;
  std::size_t n_dyads = 0;
  double omega1_hat = 0.0;
  double omega2_hat = 0.0;
  //! omega2_hat/(n h) + 2(N-2)/n * omega1_hat; may be negative.
  double sigma2_hat = 0.0;
  //! sqrt(max(sigma2_hat, 0)).
  double se = 0.0;
  //! sqrt(omega2_hat/(n h)), ignoring dependence between dyads sharing a node.
  double se_iid = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double alpha = 0.05;
  //! Set when sigma2_hat < 0 and se was clamped to zero.
  bool clamped = false;
};

//! Point estimate, dyadic-robust standard error and (1 - alpha) Wald interval.
//! Throws TooFewNodes (N < 3), InvalidAlpha, NonPositiveBandwidth.
DensityFit fit(const DyadicSample& sample, double w, double h, const KernelSpec& kernel,
               double alpha = 0.05);

//! Same as fit() but reuses an already computed kernel matrix.
DensityFit fit(const KernelMatrix& k, double w, double alpha = 0.05);

}  // namespace dyadkde
