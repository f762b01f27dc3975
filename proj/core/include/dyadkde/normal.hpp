#pragma once

namespace dyadkde {

//! Standard normal density.
double normal_pdf(double x) noexcept;

//! Standard normal CDF via erfc, accurate to machine precision in both tails.
double normal_cdf(double x) noexcept;

//! Inverse of normal_cdf on (0, 1). Acklam's rational approximation followed
//! by one Halley step against erfc; absolute error below 1e-13 on
//! [1e-300, 1 - 1e-16]. Returns -inf / +inf at 0 / 1 and NaN outside.
double normal_quantile(double p) noexcept;

}  // namespace dyadkde
