#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dyadkde/design.hpp"
#include "dyadkde/dyadic_sample.hpp"
#include "dyadkde/kernel.hpp"
#include "dyadkde/rng.hpp"

namespace dyadkde {

struct SimConfig {
  NgpDesign design;
  std::size_t n_nodes = 100;
  double h = 0.2496;
  KernelSpec kernel = gaussian();
  std::size_t replications = 1000;
  std::uint64_t seed = 20190701;
  double alpha = 0.05;

  //! Throws TooFewNodes, NonPositiveBandwidth, InvalidAlpha, InvalidArgument
  //! (zero replications) or InvalidProbability.
  void validate() const;
};

//! Per-replication outcome.
struct ReplicationRecord {
  std::size_t rep = 0;
  double f_hat = 0.0;
  double se = 0.0;
  double se_iid = 0.0;
  bool ci_hit_fg = false;
  bool ci_hit_iid = false;
  bool clamped = false;
};

struct McSummary {
  //! median(f_hat) - f_W(w).
  double median_bias = 0.0;
  //! (q95 - q05) / (2 * 1.645) of f_hat.
  double robust_sd = 0.0;
  double median_se = 0.0;
  double coverage_iid = 0.0;
  double coverage_fg = 0.0;
  double mean_f_hat = 0.0;
  double f_true = 0.0;
  std::size_t replications = 0;
  std::size_t clamped = 0;
};

struct McResult {
  McSummary summary;
  //! Ordered by replication index.
  std::vector<ReplicationRecord> records;
};

//! Draws one sample from the two-point design. A_i are drawn first, then the
//! V_ij in upper-triangular order.
DyadicSample sample_ngp(const NgpDesign& design, std::size_t n_nodes, Xoshiro256& rng);

//! Same as above, also returning the drawn attributes.
DyadicSample sample_ngp(const NgpDesign& design, std::size_t n_nodes, Xoshiro256& rng,
                        std::vector<int>& attributes);

//! Replication r of config: stream (seed, r), fit at design.w, CI hits against
//! the true density.
ReplicationRecord run_replication(const SimConfig& config, std::size_t rep, double f_true);

//! Runs all replications on `threads` workers and reduces them in replication
//! order. Output is bit-identical for any thread count.
McResult run_monte_carlo(const SimConfig& config, std::size_t threads = 1);

//! Linear-interpolation empirical quantile: x = p (m - 1), v[floor x] +
//! frac(x) (v[floor x + 1] - v[floor x]). Throws EmptyInput, InvalidArgument
//! for p outside [0, 1].
double quantile(std::span<const double> values, double p);

double median(std::span<const double> values);

//! (q95 - q05) / (2 * 1.645).
double robust_sd(std::span<const double> values);

}  // namespace dyadkde
