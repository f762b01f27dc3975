#pragma once

#include <cstddef>

#include "dyadkde/kernel.hpp"

namespace dyadkde {

//! Two-point attribute network generating process:
//! A_i = -1 with probability pi and +1 otherwise, V_ij ~ N(0, 1),
//! W_ij = A_i A_j + V_ij. The design is evaluated at the point w.
struct NgpDesign {
  double pi = 1.0 / 3.0;
  double w = 1.645;

  //! Throws InvalidProbability unless 0 < pi < 1.
  void validate() const;
};

//! Closed-form sampling properties of the dyadic density estimator under the
//! two-point design.
struct DesignQuantities {
  double f_w = 0.0;
  //! f_{W|A}(w | A = +1).
  double f_w_cond_plus = 0.0;
  //! f_{W|A}(w | A = -1).
  double f_w_cond_minus = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  //! B(w) = f_W''(w) kappa2 / 2.
  double bias_coef_b = 0.0;
  //! h^2 B(w) at the supplied bandwidth.
  double smoothing_bias = 0.0;
  //! MSE-optimal bandwidth for n; zero when B(w) == 0.
  double h_star = 0.0;
  double ase_total = 0.0;
  //! sqrt(2 Omega1 (N-2) / n): node-level (Hajek projection) term.
  double ase_t3 = 0.0;
  //! sqrt(Omega2 / (n h)): dyad-level term.
  double ase_t1 = 0.0;
  std::size_t n_nodes = 0;
  std::size_t n_dyads = 0;
  double h = 0.0;
};

//! f_W(w) = [pi^2 + (1-pi)^2] phi(w-1) + 2 pi (1-pi) phi(w+1).
double true_density(const NgpDesign& design);

//! Second derivative of f_W at design.w.
double true_density_second_derivative(const NgpDesign& design);

//! f_{W|A}(w|a) = pi phi(w + a) + (1 - pi) phi(w - a). Throws InvalidAttribute
//! unless a is -1 or +1.
double true_conditional_density(const NgpDesign& design, int a);

//! Variance across nodes of f_{W|A}(w | A).
double true_omega1(const NgpDesign& design);

//! f_W(w) times the kernel's integral of K^2.
double true_omega2(const NgpDesign& design, const KernelSpec& kernel);

double true_bias_coefficient(const NgpDesign& design, const KernelSpec& kernel);

//! h* = [Omega2 / (4 B^2 n)]^{1/5}. Throws ZeroBiasCoefficient when b == 0 and
//! InvalidArgument unless omega2 > 0 and n >= 1.
double mse_optimal_bandwidth(double omega2, double b, std::size_t n_dyads);

//! B implied by a reported smoothing bias h^2 B at bandwidth h.
double implied_bias_coefficient(double smoothing_bias, double h);

//! All closed-form quantities at (N, h). Throws TooFewNodes for N < 3 and
//! NonPositiveBandwidth unless h > 0.
DesignQuantities table1_panel_b(const NgpDesign& design, const KernelSpec& kernel,
                                std::size_t n_nodes, double h);

}  // namespace dyadkde
