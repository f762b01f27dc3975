#include "dyadkde/design.hpp"

#include <cmath>
#include <string>

#include "dyadkde/dyadic_sample.hpp"
#include "dyadkde/error.hpp"
#include "dyadkde/normal.hpp"

namespace dyadkde {
namespace {

// Weights of the two mixture components of f_W: W - 1 ~ N(0,1) when
// A_i A_j = +1, W + 1 ~ N(0,1) when A_i A_j = -1.
struct MixtureWeights {
  double same;
  double opposite;
};

MixtureWeights mixture_weights(double pi) {
  return {pi * pi + (1.0 - pi) * (1.0 - pi), 2.0 * pi * (1.0 - pi)};
}

}  // namespace

void NgpDesign::validate() const {
  if (!(pi > 0.0 && pi < 1.0)) {
    throw Error(ErrorCode::InvalidProbability, "pi must lie in (0, 1), got " + std::to_string(pi));
  }
}

double true_density(const NgpDesign& d) {
  const auto m = mixture_weights(d.pi);
  return m.same * normal_pdf(d.w - 1.0) + m.opposite * normal_pdf(d.w + 1.0);
}

double true_density_second_derivative(const NgpDesign& d) {
  const auto m = mixture_weights(d.pi);
  const double a = d.w - 1.0;
  const double b = d.w + 1.0;
  return m.same * normal_pdf(a) * (a * a - 1.0) + m.opposite * normal_pdf(b) * (b * b - 1.0);
}

double true_conditional_density(const NgpDesign& d, int a) {
  if (a != 1 && a != -1) {
    throw Error(ErrorCode::InvalidAttribute, "attribute must be -1 or +1");
  }
  const double av = static_cast<double>(a);
  return d.pi * normal_pdf(d.w + av) + (1.0 - d.pi) * normal_pdf(d.w - av);
}

double true_omega1(const NgpDesign& d) {
  const double plus = true_conditional_density(d, 1);
  const double minus = true_conditional_density(d, -1);
  // Two-point variance: p (1 - p) (f+ - f-)^2. Same value as
  // E[f^2] - f_W^2, without the cancellation.
  const double diff = plus - minus;
  return d.pi * (1.0 - d.pi) * diff * diff;
}

double true_omega2(const NgpDesign& d, const KernelSpec& kernel) {
  return true_density(d) * kernel.r2;
}

double true_bias_coefficient(const NgpDesign& d, const KernelSpec& kernel) {
  return 0.5 * true_density_second_derivative(d) * kernel.kappa2;
}

double mse_optimal_bandwidth(double omega2, double b, std::size_t n_dyads) {
  if (b == 0.0) {
    throw Error(ErrorCode::ZeroBiasCoefficient,
                "bias coefficient is zero; the MSE-optimal bandwidth is undefined");
  }
  if (!(omega2 > 0.0) || n_dyads == 0) {
    throw Error(ErrorCode::InvalidArgument, "need omega2 > 0 and n >= 1");
  }
  return std::pow(omega2 / (4.0 * b * b * static_cast<double>(n_dyads)), 0.2);
}

double implied_bias_coefficient(double smoothing_bias, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::NonPositiveBandwidth, "bandwidth must be positive");
  return smoothing_bias / (h * h);
}

DesignQuantities table1_panel_b(const NgpDesign& d, const KernelSpec& kernel,
                                std::size_t n_nodes, double h) {
  d.validate();
  if (n_nodes < 3) throw Error(ErrorCode::TooFewNodes, "design quantities need N >= 3");
  if (!(h > 0.0)) throw Error(ErrorCode::NonPositiveBandwidth, "bandwidth must be positive");

  DesignQuantities q;
  q.n_nodes = n_nodes;
  q.n_dyads = dyad_count(n_nodes);
  q.h = h;
  q.f_w = true_density(d);
  q.f_w_cond_plus = true_conditional_density(d, 1);
  q.f_w_cond_minus = true_conditional_density(d, -1);
  q.omega1 = true_omega1(d);
  q.omega2 = true_omega2(d, kernel);
  q.bias_coef_b = true_bias_coefficient(d, kernel);
  q.smoothing_bias = h * h * q.bias_coef_b;
  q.h_star = (q.bias_coef_b != 0.0 && q.omega2 > 0.0)
                 ? mse_optimal_bandwidth(q.omega2, q.bias_coef_b, q.n_dyads)
                 : 0.0;

  const double n = static_cast<double>(q.n_dyads);
  const double t3_var = 2.0 * q.omega1 * (static_cast<double>(n_nodes) - 2.0) / n;
  const double t1_var = q.omega2 / (n * h);
  q.ase_t3 = std::sqrt(t3_var);
  q.ase_t1 = std::sqrt(t1_var);
  q.ase_total = std::sqrt(t3_var + t1_var);
  return q;
}

}  // namespace dyadkde
