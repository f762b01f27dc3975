#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dyadkde {

using NodeId = std::int64_t;

//! Unordered pair {i, j}. Canonical form has i < j.
struct DyadIndex {
  NodeId i;
  NodeId j;

  //! Throws SelfLoop when i == j.
  static DyadIndex canonical(NodeId a, NodeId b);

  friend bool operator==(const DyadIndex&, const DyadIndex&) = default;
};

//! Number of unordered pairs among n_nodes nodes.
constexpr std::size_t dyad_count(std::size_t n_nodes) noexcept {
  return n_nodes < 2 ? 0 : n_nodes * (n_nodes - 1) / 2;
}

//! Row-major position of {i, j}, i < j, in upper-triangular storage.
constexpr std::size_t triangular_index(std::size_t i, std::size_t j, std::size_t n_nodes) noexcept {
  return i * n_nodes - i * (i + 1) / 2 + (j - i - 1);
}

//! Undirected dyadic sample: N nodes and one weight per unordered pair.
//!
//! Weights are stored once per pair in row-major upper-triangular order,
//! (0,1), (0,2), ..., (0,N-1), (1,2), ... so get(i, j) == get(j, i) holds by
//! construction. Immutable after construction.
class DyadicSample {
 public:
  //! Takes ownership of upper-triangular weights. Throws InvalidArgument on a
  //! length mismatch or fewer than two nodes, NonFiniteWeight on NaN/inf.
  DyadicSample(std::size_t n_nodes, std::vector<double> weights);

  std::size_t n_nodes() const noexcept { return n_nodes_; }
  std::size_t n_dyads() const noexcept { return weights_.size(); }

  //! Throws SelfLoop for i == j and NodeOutOfRange for ids >= N.
  double get(std::size_t i, std::size_t j) const;

  std::span<const double> weights() const noexcept { return weights_; }

  //! Sample with node k of the result carrying node perm[k] of this one.
  DyadicSample relabeled(std::span<const std::size_t> perm) const;

  //! Applies w -> scale * w + shift to every weight.
  DyadicSample affine(double scale, double shift) const;

 private:
  std::size_t n_nodes_;
  std::vector<double> weights_;
};

//! One edge-list row with dense 0-based node ids.
struct EdgeRow {
  NodeId i;
  NodeId j;
  double w;
};

//! Builds a sample from dense 0-based rows. Both orientations of a pair may
//! appear, but their values must be bit-equal.
DyadicSample from_edge_list(std::span<const EdgeRow> rows);

//! (1/n) * sum over i<j of W_ij.
double dyad_mean(const DyadicSample& sample);

}  // namespace dyadkde
