#include "dyadkde/variance.hpp"

#include <cmath>
#include <vector>

#include "dyadkde/error.hpp"

namespace dyadkde {
namespace {

void require_triples(const KernelMatrix& k) {
  if (k.n_nodes < 3) throw Error(ErrorCode::TooFewNodes, "estimator needs N >= 3");
}

double sum_of_squares(const KernelMatrix& k, double center) {
  double s = 0.0;
  for (double v : k.values) s += (v - center) * (v - center);
  return s;
}

double triple_count(std::size_t n_nodes) {
  const double n = static_cast<double>(n_nodes);
  return n * (n - 1.0) * (n - 2.0);
}

}  // namespace

double omega2_tilde(const KernelMatrix& k) {
  return k.h * sum_of_squares(k, 0.0) / static_cast<double>(k.n_dyads());
}

// Evaluated as h times the mean squared deviation, which equals
// h [ mean(K^2) - f_hat^2 ] exactly and cannot round below zero.
double omega2_hat(const KernelMatrix& k) {
  return k.h * sum_of_squares(k, k.mean()) / static_cast<double>(k.n_dyads());
}

double omega1_hat_naive(const KernelMatrix& k) {
  require_triples(k);
  const std::size_t n = k.n_nodes;
  const double f = k.mean();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double cij = k.at(i, j) - f;
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        sum += cij * (k.at(i, l) - f);
      }
    }
  }
  return sum / triple_count(n);
}

double omega1_hat_triads(const KernelMatrix& k) {
  require_triples(k);
  const std::size_t n = k.n_nodes;
  const double f = k.mean();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double kij = k.at(i, j);
      for (std::size_t l = j + 1; l < n; ++l) {
        const double kil = k.at(i, l);
        const double kjl = k.at(j, l);
        sum += (kij * kil + kij * kjl + kil * kjl) / 3.0;
      }
    }
  }
  return sum / (triple_count(n) / 6.0) - f * f;
}

double omega1_hat_fast(const KernelMatrix& k) {
  require_triples(k);
  const std::size_t n = k.n_nodes;
  const double f = k.mean();
  std::vector<double> row_sum(n, 0.0);
  std::vector<double> row_sq(n, 0.0);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++idx) {
      const double c = k.values[idx] - f;
      row_sum[i] += c;
      row_sum[j] += c;
      row_sq[i] += c * c;
      row_sq[j] += c * c;
    }
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += row_sum[i] * row_sum[i] - row_sq[i];
  return total / triple_count(n);
}

VarianceComponents sigma2_hat(const KernelMatrix& k, bool with_fg) {
  require_triples(k);
  const double n = static_cast<double>(k.n_dyads());
  const double big_n = static_cast<double>(k.n_nodes);
  VarianceComponents out;
  out.omega2_tilde = omega2_tilde(k);
  out.omega2_hat = omega2_hat(k);
  out.omega1_hat = omega1_hat_fast(k);
  out.sigma2_hat = out.omega2_hat / (n * k.h) + 2.0 * (big_n - 2.0) / n * out.omega1_hat;
  if (with_fg) out.fg_sigma2 = fg_double_sum(k);
  return out;
}

double fg_double_sum(const KernelMatrix& k) {
  require_triples(k);
  const std::size_t n_nodes = k.n_nodes;
  const double f = k.mean();
  struct Dyad {
    std::size_t i, j;
    double c;
  };
  std::vector<Dyad> dyads;
  dyads.reserve(k.n_dyads());
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n_nodes; ++i) {
    for (std::size_t j = i + 1; j < n_nodes; ++j, ++idx) dyads.push_back({i, j, k.values[idx] - f});
  }
  double sum = 0.0;
  for (const Dyad& a : dyads) {
    for (const Dyad& b : dyads) {
      const bool shares = a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j;
      if (shares) sum += a.c * b.c;
    }
  }
  const double n = static_cast<double>(dyads.size());
  return sum / (n * n);
}

double omega2_tilde(const DyadicSample& s, double w, double h, const KernelSpec& kernel) {
  return omega2_tilde(kernel_matrix(s, w, h, kernel));
}
double omega2_hat(const DyadicSample& s, double w, double h, const KernelSpec& kernel) {
  return omega2_hat(kernel_matrix(s, w, h, kernel));
}
double omega1_hat_naive(const DyadicSample& s, double w, double h, const KernelSpec& kernel) {
  return omega1_hat_naive(kernel_matrix(s, w, h, kernel));
}
double omega1_hat_triads(const DyadicSample& s, double w, double h, const KernelSpec& kernel) {
  return omega1_hat_triads(kernel_matrix(s, w, h, kernel));
}
double omega1_hat_fast(const DyadicSample& s, double w, double h, const KernelSpec& kernel) {
  return omega1_hat_fast(kernel_matrix(s, w, h, kernel));
}
VarianceComponents sigma2_hat(const DyadicSample& s, double w, double h, const KernelSpec& kernel,
                              bool with_fg) {
  return sigma2_hat(kernel_matrix(s, w, h, kernel), with_fg);
}
double fg_double_sum(const DyadicSample& s, double w, double h, const KernelSpec& kernel) {
  return fg_double_sum(kernel_matrix(s, w, h, kernel));
}

}  // namespace dyadkde
