#pragma once

#include "dyadkde/density.hpp"
#include "dyadkde/dyadic_sample.hpp"
#include "dyadkde/kernel.hpp"

namespace dyadkde {

struct VarianceComponents {
  //! (h/n) sum K_ij^2.
  double omega2_tilde = 0.0;
  //! h [ (1/n) sum K_ij^2 - f_hat^2 ].
  double omega2_hat = 0.0;
  //! Average of (K_ij - f_hat)(K_ik - f_hat) over ordered triples of distinct nodes.
  double omega1_hat = 0.0;
  //! omega2_hat/(n h) + 2(N-2)/n * omega1_hat.
  double sigma2_hat = 0.0;
  //! Fafchamps-Gubert double sum. Only filled by sigma2_hat() when requested,
  //! since it costs O(n^2).
  double fg_sigma2 = 0.0;
};

// Each estimator has a sample-based form and a KernelMatrix form; the latter
// lets callers evaluate K_ij once and reuse it.

double omega2_tilde(const KernelMatrix& k);
double omega2_tilde(const DyadicSample& sample, double w, double h, const KernelSpec& kernel);

double omega2_hat(const KernelMatrix& k);
double omega2_hat(const DyadicSample& sample, double w, double h, const KernelSpec& kernel);

//! Explicit O(N^3) loop over ordered triples i, j, k distinct.
double omega1_hat_naive(const KernelMatrix& k);
double omega1_hat_naive(const DyadicSample& sample, double w, double h, const KernelSpec& kernel);

//! Equivalent form C(N,3)^{-1} sum_{i<j<k} S_ijk - f_hat^2 with
//! S_ijk = (K_ij K_ik + K_ij K_jk + K_ik K_jk) / 3. O(N^3).
double omega1_hat_triads(const KernelMatrix& k);
double omega1_hat_triads(const DyadicSample& sample, double w, double h, const KernelSpec& kernel);

//! O(N^2) row-sum reduction of the triple sum: with C_ij = K_ij - f_hat,
//! R_i = sum_j C_ij and Q_i = sum_j C_ij^2, returns
//! sum_i (R_i^2 - Q_i) / (N(N-1)(N-2)).
double omega1_hat_fast(const KernelMatrix& k);
double omega1_hat_fast(const DyadicSample& sample, double w, double h, const KernelSpec& kernel);

//! Combined dyadic-robust variance of f_hat. All estimators above throw
//! TooFewNodes for N < 3 where a triple is needed.
VarianceComponents sigma2_hat(const KernelMatrix& k, bool with_fg = false);
VarianceComponents sigma2_hat(const DyadicSample& sample, double w, double h,
                              const KernelSpec& kernel, bool with_fg = false);

//! (1/n^2) sum over dyad pairs sharing at least one node (a dyad shares
//! both of its nodes with itself) of (K_ij - f_hat)(K_kl - f_hat).
//! Quadratic in the number of dyads: intended as a cross-check only.
double fg_double_sum(const KernelMatrix& k);
double fg_double_sum(const DyadicSample& sample, double w, double h, const KernelSpec& kernel);

}  // namespace dyadkde
