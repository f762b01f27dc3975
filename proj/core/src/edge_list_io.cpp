#include "dyadkde/edge_list_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "dyadkde/error.hpp"
#include "edge_accumulator.hpp"

namespace dyadkde {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view s, NodeId& out) {
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

struct RawRow {
  std::string a;
  std::string b;
  double w;
  std::size_t line;
};

}  // namespace

EdgeListFile read_edge_list(std::istream& in, std::string_view source) {
  const std::string src(source);
  auto at = [&](std::size_t line) { return src + ":" + std::to_string(line); };

  std::vector<RawRow> rows;
  std::string buffer;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, buffer)) {
    ++line_no;
    std::string_view line = trim(buffer);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line = trim(line.substr(3));
    if (line.empty() || line.front() == '#') continue;

    std::string_view fields[3];
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      const auto piece = trim(line.substr(start, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - start));
      if (count < 3) fields[count] = piece;
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!header_seen) {
      if (count != 3 || fields[0] != "i" || fields[1] != "j" || fields[2] != "w") {
        throw Error(ErrorCode::MalformedRow, at(line_no) + ": expected header `i,j,w`");
      }
      header_seen = true;
      continue;
    }
    if (count != 3) {
      throw Error(ErrorCode::MalformedRow,
                  at(line_no) + ": expected 3 fields, found " + std::to_string(count));
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw Error(ErrorCode::MalformedRow, at(line_no) + ": empty node label");
    }
    double w = 0.0;
    if (!parse_double(fields[2], w)) {
      throw Error(ErrorCode::MalformedRow,
                  at(line_no) + ": weight `" + std::string(fields[2]) + "` is not a number");
    }
    if (fields[0] == fields[1]) {
      throw Error(ErrorCode::SelfLoop,
                  at(line_no) + ": row pairs node " + std::string(fields[0]) + " with itself");
    }
    if (!std::isfinite(w)) {
      throw Error(ErrorCode::NonFiniteWeight, at(line_no) + ": weight is not finite");
    }
    rows.push_back({std::string(fields[0]), std::string(fields[1]), w, line_no});
  }
  if (!header_seen) throw Error(ErrorCode::EmptyInput, src + ": no header line");
  if (rows.empty()) throw Error(ErrorCode::EmptyInput, src + ": no data rows");

  // Label compaction.
  std::vector<std::string> labels;
  for (const auto& r : rows) {
    labels.push_back(r.a);
    labels.push_back(r.b);
  }
  bool numeric = true;
  std::map<std::string, NodeId> as_int;
  for (const auto& l : labels) {
    NodeId v = 0;
    if (!parse_int(l, v)) {
      numeric = false;
      break;
    }
    as_int.emplace(l, v);
  }
  std::sort(labels.begin(), labels.end(), [&](const std::string& x, const std::string& y) {
    return numeric ? as_int.at(x) < as_int.at(y) : x < y;
  });
  labels.erase(std::unique(labels.begin(), labels.end(),
                           [&](const std::string& x, const std::string& y) {
                             return numeric ? as_int.at(x) == as_int.at(y) : x == y;
                           }),
               labels.end());

  std::map<std::string, std::size_t> dense;
  if (numeric) {
    // "01" and "1" name the same node.
    std::map<NodeId, std::size_t> by_value;
    for (std::size_t k = 0; k < labels.size(); ++k) by_value.emplace(as_int.at(labels[k]), k);
    for (const auto& [text, value] : as_int) dense.emplace(text, by_value.at(value));
  } else {
    for (std::size_t k = 0; k < labels.size(); ++k) dense.emplace(labels[k], k);
  }

  bool identity = numeric;
  for (std::size_t k = 0; identity && k < labels.size(); ++k) {
    identity = as_int.at(labels[k]) == static_cast<NodeId>(k);
  }

  detail::EdgeAccumulator acc(labels.size(),
                              [&](std::size_t line) { return at(line); });
  for (const auto& r : rows) acc.add(dense.at(r.a), dense.at(r.b), r.w, r.line);
  try {
    auto sample = acc.finish([&](std::size_t k) { return labels[k]; });
    return EdgeListFile{std::move(sample), std::move(labels), rows.size(), acc.duplicates(),
                        identity};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MissingDyad) {
      throw Error(e.code(), src + ": " + std::string(e.what()).substr(to_string(e.code()).size() + 2));
    }
    throw;
  }
}

EdgeListFile read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return read_edge_list(in, path.string());
}

void write_edge_list(std::ostream& out, const DyadicSample& sample) {
  out << "i,j,w\n";
  const std::size_t n = sample.n_nodes();
  const auto w = sample.weights();
  char buf[64];
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++idx) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w[idx]);
      out << i << ',' << j << ',' << std::string_view(buf, static_cast<std::size_t>(ptr - buf))
          << '\n';
    }
  }
}

}  // namespace dyadkde
