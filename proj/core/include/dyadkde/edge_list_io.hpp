#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dyadkde/dyadic_sample.hpp"

namespace dyadkde {

//! Result of reading an `i,j,w` edge-list CSV.
struct EdgeListFile {
  DyadicSample sample;
  //! labels[k] is the original label of dense node k.
  std::vector<std::string> labels;
  std::size_t data_rows = 0;
  //! Rows that repeated an already-seen pair (with an equal value).
  std::size_t duplicate_rows = 0;
  //! True when every label parsed as an integer and the labels were already 0..N-1.
  bool identity_labels = false;
};

//! Reads the CSV format: header `i,j,w`, `#` comment lines, one row per dyad.
//! Node labels may be arbitrary strings; they are compacted to dense ids
//! (numeric order when all labels are integers, lexicographic otherwise).
//! Errors carry `<source>:<line>` and the violated rule.
EdgeListFile read_edge_list(std::istream& in, std::string_view source = "<stream>");
EdgeListFile read_edge_list(const std::filesystem::path& path);

//! Writes the canonical form: header, then i<j rows in lexicographic order,
//! weights in shortest round-trip representation.
void write_edge_list(std::ostream& out, const DyadicSample& sample);

}  // namespace dyadkde
