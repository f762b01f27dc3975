#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "dyadkde/dyadic_sample.hpp"
#include "dyadkde/error.hpp"

namespace dyadkde::detail {

// Collects rows into triangular storage and enforces the duplicate policy.
// `where(row)` renders a row position for diagnostics.
class EdgeAccumulator {
 public:
  using Where = std::function<std::string(std::size_t)>;

  explicit EdgeAccumulator(std::size_t n_nodes, Where where = default_where)
      : n_nodes_(n_nodes),
        where_(std::move(where)),
        values_(dyad_count(n_nodes)),
        first_row_(dyad_count(n_nodes), kUnset) {}

  void add(std::size_t i, std::size_t j, double w, std::size_t row) {
    if (i == j) {
      throw Error(ErrorCode::SelfLoop, where_(row) + ": row pairs node " + std::to_string(i) +
                                           " with itself");
    }
    if (!std::isfinite(w)) {
      throw Error(ErrorCode::NonFiniteWeight, where_(row) + ": weight is not finite");
    }
    if (i > j) std::swap(i, j);
    const std::size_t idx = triangular_index(i, j, n_nodes_);
    if (first_row_[idx] == kUnset) {
      first_row_[idx] = row;
      values_[idx] = w;
      return;
    }
    if (values_[idx] != w) {
      throw Error(ErrorCode::ConflictingDuplicate,
                  where_(row) + ": dyad {" + std::to_string(i) + "," + std::to_string(j) +
                      "} conflicts with the value given at " + where_(first_row_[idx]));
    }
    ++duplicates_;
  }

  std::size_t duplicates() const noexcept { return duplicates_; }

  // `label(k)` names node k in the MissingDyad message (empty: use the id).
  DyadicSample finish(const std::function<std::string(std::size_t)>& label) {
    if (n_nodes_ < 2) throw Error(ErrorCode::TooFewNodes, "edge list names fewer than 2 nodes");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n_nodes_; ++i) {
      for (std::size_t j = i + 1; j < n_nodes_; ++j, ++idx) {
        if (first_row_[idx] == kUnset) {
          auto name = [&](std::size_t k) {
            std::string s = label(k);
            return s.empty() ? std::to_string(k) : s;
          };
          throw Error(ErrorCode::MissingDyad,
                      "dyad {" + name(i) + "," + name(j) + "} never appears");
        }
      }
    }
    return DyadicSample(n_nodes_, std::move(values_));
  }

 private:
  static constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  static std::string default_where(std::size_t row) { return "row " + std::to_string(row); }

  std::size_t n_nodes_;
  Where where_;
  std::vector<double> values_;
  std::vector<std::size_t> first_row_;
  std::size_t duplicates_ = 0;
};

}  // namespace dyadkde::detail
