#include "dyadkde/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dyadkde/density.hpp"
#include "dyadkde/error.hpp"
#include "dyadkde/normal.hpp"
#include "dyadkde/parallel.hpp"

namespace dyadkde {

void SimConfig::validate() const {
  design.validate();
  if (n_nodes < 3) {
    throw Error(ErrorCode::TooFewNodes,
                "simulation needs N >= 3, got " + std::to_string(n_nodes));
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error(ErrorCode::NonPositiveBandwidth, "bandwidth must be positive");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::InvalidAlpha, "alpha must lie in (0, 1)");
  if (replications == 0) throw Error(ErrorCode::InvalidArgument, "need at least one replication");
}

DyadicSample sample_ngp(const NgpDesign& design, std::size_t n_nodes, Xoshiro256& rng,
                        std::vector<int>& attributes) {
  if (n_nodes < 2) throw Error(ErrorCode::TooFewNodes, "need N >= 2");
  attributes.resize(n_nodes);
  for (auto& a : attributes) a = rng.uniform() < design.pi ? -1 : 1;
  std::vector<double> weights(dyad_count(n_nodes));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n_nodes; ++i) {
    for (std::size_t j = i + 1; j < n_nodes; ++j, ++idx) {
      weights[idx] = static_cast<double>(attributes[i] * attributes[j]) + rng.normal();
    }
  }
  return DyadicSample(n_nodes, std::move(weights));
}

DyadicSample sample_ngp(const NgpDesign& design, std::size_t n_nodes, Xoshiro256& rng) {
  std::vector<int> attributes;
  return sample_ngp(design, n_nodes, rng, attributes);
}

ReplicationRecord run_replication(const SimConfig& config, std::size_t rep, double f_true) {
  auto rng = Xoshiro256::stream(config.seed, rep);
  const DyadicSample sample = sample_ngp(config.design, config.n_nodes, rng);
  const DensityFit f =
      fit(kernel_matrix(sample, config.design.w, config.h, config.kernel), config.design.w,
          config.alpha);
  const double z = normal_quantile(1.0 - 0.5 * config.alpha);

  ReplicationRecord r;
  r.rep = rep;
  r.f_hat = f.f_hat;
  r.se = f.se;
  r.se_iid = f.se_iid;
  r.clamped = f.clamped;
  r.ci_hit_fg = f.ci_low <= f_true && f_true <= f.ci_high;
  r.ci_hit_iid = f.f_hat - z * f.se_iid <= f_true && f_true <= f.f_hat + z * f.se_iid;
  return r;
}

McResult run_monte_carlo(const SimConfig& config, std::size_t threads) {
  config.validate();
  const double f_true = true_density(config.design);

  McResult out;
  out.records.resize(config.replications);
  parallel_for(config.replications, threads, [&](std::size_t r) {
    out.records[r] = run_replication(config, r, f_true);
  });

  const std::size_t m = config.replications;
  std::vector<double> f_hat(m);
  std::vector<double> se(m);
  std::size_t hits_fg = 0;
  std::size_t hits_iid = 0;
  std::size_t clamped = 0;
  double sum = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& rec = out.records[r];
    f_hat[r] = rec.f_hat;
    se[r] = rec.se;
    hits_fg += rec.ci_hit_fg;
    hits_iid += rec.ci_hit_iid;
    clamped += rec.clamped;
    sum += rec.f_hat;
  }

  McSummary& s = out.summary;
  s.f_true = f_true;
  s.replications = m;
  s.median_bias = median(f_hat) - f_true;
  s.robust_sd = robust_sd(f_hat);
  s.median_se = median(se);
  s.coverage_fg = static_cast<double>(hits_fg) / static_cast<double>(m);
  s.coverage_iid = static_cast<double>(hits_iid) / static_cast<double>(m);
  s.mean_f_hat = sum / static_cast<double>(m);
  s.clamped = clamped;
  return out;
}

double quantile(std::span<const double> values, double p) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "quantile of an empty sequence");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "p must lie in [0, 1]");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const double x = p * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(x));
  if (lo + 1 >= v.size()) return v.back();
  const double frac = x - static_cast<double>(lo);
  return v[lo] + frac * (v[lo + 1] - v[lo]);
}

double median(std::span<const double> values) { return quantile(values, 0.5); }

double robust_sd(std::span<const double> values) {
  return (quantile(values, 0.95) - quantile(values, 0.05)) / (2.0 * 1.645);
}

}  // namespace dyadkde
