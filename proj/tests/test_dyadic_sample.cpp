#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "dyadkde/dyadic_sample.hpp"
#include "dyadkde/edge_list_io.hpp"
#include "dyadkde/error.hpp"
#include "oracles.hpp"

using namespace dyadkde;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected dyadkde::Error");
  return ErrorCode::Io;
}

EdgeListFile parse(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in, "edges.csv");
}

}  // namespace

TEST_CASE("triangular index enumerates pairs in row-major order") {
  for (std::size_t n : {2u, 3u, 7u, 20u}) {
    std::size_t expected = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) CHECK(triangular_index(i, j, n) == expected++);
    }
    CHECK(expected == dyad_count(n));
  }
}

TEST_CASE("DyadIndex canonical form") {
  CHECK(DyadIndex::canonical(3, 1) == DyadIndex{1, 3});
  CHECK(DyadIndex::canonical(1, 3) == DyadIndex{1, 3});
  CHECK(code_of([] { DyadIndex::canonical(2, 2); }) == ErrorCode::SelfLoop);
}

TEST_CASE("DyadicSample invariants") {
  CHECK(code_of([] { DyadicSample(3, {1.0, 2.0}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { DyadicSample(1, {}); }) == ErrorCode::TooFewNodes);
  CHECK(code_of([] {
          DyadicSample(3, {1.0, std::numeric_limits<double>::quiet_NaN(), 0.0});
        }) == ErrorCode::NonFiniteWeight);
  CHECK(code_of([] {
          DyadicSample(2, {std::numeric_limits<double>::infinity()});
        }) == ErrorCode::NonFiniteWeight);

  const DyadicSample s(4, {1, 2, 3, 4, 5, 6});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(s.get(i, j) == s.get(j, i));
  CHECK(s.get(2, 3) == 6.0);
  CHECK(code_of([&] { s.get(1, 1); }) == ErrorCode::SelfLoop);
  CHECK(code_of([&] { s.get(0, 4); }) == ErrorCode::NodeOutOfRange);
}

TEST_CASE("from_edge_list") {
  SUBCASE("single dyad") {
    const std::vector<EdgeRow> rows{{0, 1, 2.0}};
    const auto s = from_edge_list(rows);
    CHECK(s.n_nodes() == 2);
    CHECK(s.n_dyads() == 1);
    CHECK(s.get(0, 1) == 2.0);
  }
  SUBCASE("missing pair") {
    const std::vector<EdgeRow> rows{{0, 1, 1.0}, {1, 2, 1.0}};
    CHECK(code_of([&] { from_edge_list(rows); }) == ErrorCode::MissingDyad);
  }
  SUBCASE("both orientations with equal values") {
    const std::vector<EdgeRow> rows{{0, 1, 1.0}, {1, 0, 1.0}, {0, 2, 0.5}, {1, 2, -3.0}};
    const auto s = from_edge_list(rows);
    CHECK(s.n_nodes() == 3);
    CHECK(s.n_dyads() == 3);
    CHECK(s.get(1, 0) == 1.0);
    CHECK(s.get(2, 1) == -3.0);
  }
  SUBCASE("conflicting duplicate") {
    const std::vector<EdgeRow> rows{{0, 1, 1.0}, {1, 0, 1.5}};
    CHECK(code_of([&] { from_edge_list(rows); }) == ErrorCode::ConflictingDuplicate);
  }
  SUBCASE("self loop") {
    const std::vector<EdgeRow> rows{{0, 1, 1.0}, {1, 1, 1.0}};
    CHECK(code_of([&] { from_edge_list(rows); }) == ErrorCode::SelfLoop);
  }
  SUBCASE("non-finite weight") {
    const std::vector<EdgeRow> rows{{0, 1, std::numeric_limits<double>::quiet_NaN()}};
    CHECK(code_of([&] { from_edge_list(rows); }) == ErrorCode::NonFiniteWeight);
  }
  SUBCASE("negative id") {
    const std::vector<EdgeRow> rows{{-1, 1, 1.0}};
    CHECK(code_of([&] { from_edge_list(rows); }) == ErrorCode::InvalidNodeId);
  }
}

TEST_CASE("dyad_mean") {
  CHECK(dyad_mean(DyadicSample(2, {3.0})) == 3.0);
  CHECK(dyad_mean(DyadicSample(3, {1.0, 2.0, 3.0})) == doctest::Approx(2.0).epsilon(1e-15));

  std::mt19937_64 gen(11);
  const auto s = oracle::random_sample(6, gen);
  double brute = 0.0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) brute += s.get(i, j);
  CHECK(dyad_mean(s) == doctest::Approx(brute / 15.0).epsilon(1e-14));
}

TEST_CASE("dyad_mean is invariant to node relabeling") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + trial % 9;
    const auto s = oracle::random_sample(n, gen);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    const auto t = s.relabeled(perm);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) CHECK(t.get(i, j) == s.get(perm[i], perm[j]));
    CHECK(dyad_mean(t) == doctest::Approx(dyad_mean(s)).epsilon(1e-14));
  }
}

TEST_CASE("edge-list CSV reading") {
  SUBCASE("valid file with comments and a mirrored duplicate") {
    const auto f = parse("# a comment\ni,j,w\n0,1,1.0\n1,0,1.0\n# another\n0,2,0.5\n1,2,-3\n");
    CHECK(f.sample.n_nodes() == 3);
    CHECK(f.data_rows == 4);
    CHECK(f.duplicate_rows == 1);
    CHECK(f.identity_labels);
    CHECK(f.sample.get(1, 2) == -3.0);
  }
  SUBCASE("string labels are compacted lexicographically") {
    const auto f = parse("i,j,w\nbob,alice,1\ncarol,alice,2\nbob,carol,3\n");
    REQUIRE(f.labels == std::vector<std::string>{"alice", "bob", "carol"});
    CHECK_FALSE(f.identity_labels);
    CHECK(f.sample.get(0, 1) == 1.0);
    CHECK(f.sample.get(0, 2) == 2.0);
    CHECK(f.sample.get(1, 2) == 3.0);
  }
  SUBCASE("sparse integer labels keep numeric order") {
    const auto f = parse("i,j,w\n10,2,1\n2,7,2\n7,10,3\n");
    REQUIRE(f.labels == std::vector<std::string>{"2", "7", "10"});
    CHECK(f.sample.get(0, 2) == 1.0);
    CHECK(f.sample.get(1, 2) == 3.0);
  }
  SUBCASE("conflicting duplicate reports the second line") {
    try {
      parse("i,j,w\n0,1,1.0\n0,2,1.0\n1,0,2.0\n1,2,1.0\n");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ConflictingDuplicate);
      CHECK(std::string(e.what()).find("edges.csv:4") != std::string::npos);
      CHECK(std::string(e.what()).find("edges.csv:2") != std::string::npos);
    }
  }
  SUBCASE("self loop reports its line") {
    try {
      parse("i,j,w\n0,1,1\n2,2,1\n");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SelfLoop);
      CHECK(std::string(e.what()).find("edges.csv:3") != std::string::npos);
    }
  }
  SUBCASE("missing dyad, bad header, malformed rows") {
    CHECK(code_of([] { parse("i,j,w\n0,1,1\n1,2,1\n"); }) == ErrorCode::MissingDyad);
    CHECK(code_of([] { parse("a,b,c\n0,1,1\n"); }) == ErrorCode::MalformedRow);
    CHECK(code_of([] { parse("i,j,w\n0,1\n"); }) == ErrorCode::MalformedRow);
    CHECK(code_of([] { parse("i,j,w\n0,1,abc\n"); }) == ErrorCode::MalformedRow);
    CHECK(code_of([] { parse("i,j,w\n0,1,nan\n"); }) == ErrorCode::NonFiniteWeight);
    CHECK(code_of([] { parse("i,j,w\n"); }) == ErrorCode::EmptyInput);
    CHECK(code_of([] { parse(""); }) == ErrorCode::EmptyInput);
  }
}

TEST_CASE("edge-list write then read reproduces the sample exactly") {
  std::mt19937_64 gen(99);
  for (std::size_t n : {2u, 3u, 9u, 25u}) {
    const auto s = oracle::random_sample(n, gen, 1e3);
    std::stringstream buf;
    write_edge_list(buf, s);
    const auto back = read_edge_list(buf, "roundtrip");
    REQUIRE(back.sample.n_nodes() == n);
    CHECK(std::equal(s.weights().begin(), s.weights().end(), back.sample.weights().begin()));
  }
}
