#include "dyadkde/dyadic_sample.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "dyadkde/error.hpp"
#include "edge_accumulator.hpp"

namespace dyadkde {

DyadIndex DyadIndex::canonical(NodeId a, NodeId b) {
  if (a == b) throw Error(ErrorCode::SelfLoop, "node " + std::to_string(a) + " paired with itself");
  return a < b ? DyadIndex{a, b} : DyadIndex{b, a};
}

DyadicSample::DyadicSample(std::size_t n_nodes, std::vector<double> weights)
    : n_nodes_(n_nodes), weights_(std::move(weights)) {
  if (n_nodes_ < 2) {
    throw Error(ErrorCode::TooFewNodes, "a dyadic sample needs at least 2 nodes");
  }
  if (weights_.size() != dyad_count(n_nodes_)) {
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(dyad_count(n_nodes_)) + " weights for " +
                    std::to_string(n_nodes_) + " nodes, got " + std::to_string(weights_.size()));
  }
  for (double v : weights_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteWeight, "weight is not finite");
  }
}

double DyadicSample::get(std::size_t i, std::size_t j) const {
  if (i >= n_nodes_ || j >= n_nodes_) {
    throw Error(ErrorCode::NodeOutOfRange, "node id out of range");
  }
  if (i == j) throw Error(ErrorCode::SelfLoop, "get(i, i) is undefined");
  if (i > j) std::swap(i, j);
  return weights_[triangular_index(i, j, n_nodes_)];
}

DyadicSample DyadicSample::relabeled(std::span<const std::size_t> perm) const {
  if (perm.size() != n_nodes_) {
    throw Error(ErrorCode::InvalidArgument, "permutation length differs from node count");
  }
  std::vector<bool> seen(n_nodes_, false);
  for (std::size_t p : perm) {
    if (p >= n_nodes_ || seen[p]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    seen[p] = true;
  }
  std::vector<double> out(weights_.size());
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n_nodes_; ++i) {
    for (std::size_t j = i + 1; j < n_nodes_; ++j) out[idx++] = get(perm[i], perm[j]);
  }
  return DyadicSample(n_nodes_, std::move(out));
}

DyadicSample DyadicSample::affine(double scale, double shift) const {
  std::vector<double> out(weights_);
  for (double& v : out) v = scale * v + shift;
  return DyadicSample(n_nodes_, std::move(out));
}

DyadicSample from_edge_list(std::span<const EdgeRow> rows) {
  if (rows.empty()) throw Error(ErrorCode::EmptyInput, "edge list has no rows");
  NodeId max_id = -1;
  for (const auto& row : rows) {
    if (row.i < 0 || row.j < 0) {
      throw Error(ErrorCode::InvalidNodeId, "node ids must be nonnegative");
    }
    max_id = std::max({max_id, row.i, row.j});
  }
  detail::EdgeAccumulator acc(static_cast<std::size_t>(max_id) + 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    acc.add(static_cast<std::size_t>(rows[r].i), static_cast<std::size_t>(rows[r].j), rows[r].w, r);
  }
  return acc.finish([](std::size_t) { return std::string{}; });
}

double dyad_mean(const DyadicSample& sample) {
  const auto w = sample.weights();
  return std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(w.size());
}

}  // namespace dyadkde
