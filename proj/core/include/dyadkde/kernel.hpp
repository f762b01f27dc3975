#pragma once

#include <optional>
#include <string_view>

namespace dyadkde {

//! A second-order kernel with the analytic constants that enter the bias and
//! variance expressions.
struct KernelSpec {
  std::string_view name;
  double (*evaluate)(double u) noexcept;
  //! Integral of u^2 K(u).
  double kappa2;
  //! Integral of K(u)^2.
  double r2;
  //! sup_u K(u).
  double bound;
  //! K vanishes for |u| > support_radius; empty when the support is unbounded.
  std::optional<double> support_radius;

  double operator()(double u) const noexcept { return evaluate(u); }
  bool compact() const noexcept { return support_radius.has_value(); }

  //! Half-width used for numerical integration: the support radius, or 8
  //! for unbounded kernels.
  double effective_radius() const noexcept { return support_radius.value_or(8.0); }
};

//! K(u) = 0.75 (1 - u^2) on |u| <= 1. Library default.
KernelSpec epanechnikov() noexcept;

//! Standard normal density. Unbounded support, so it violates the
//! compact-support assumption of the theory; it is the replication kernel
//! for the two-point simulation design.
KernelSpec gaussian() noexcept;

//! Lookup by CLI name ("epanechnikov" or "gaussian"). Throws UnknownKernel.
KernelSpec kernel_by_name(std::string_view name);

//! (1/h) K((w - s) / h). Throws NonPositiveBandwidth unless h > 0.
double scaled_eval(const KernelSpec& kernel, double w, double s, double h);

}  // namespace dyadkde
