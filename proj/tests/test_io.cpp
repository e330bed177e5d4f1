#include <string>

#include "doctest.h"
#include "mdimlab/harness.hpp"
#include "mdimlab/io.hpp"
#include "support.hpp"

using namespace mdimlab;

namespace {

ErrorCode parse_error_of(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::BadSpec;
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("edge lists") {
  const Graph k2 = from_edge_list("2 1\n0 1\n");
  CHECK(k2 == testing::path(2));
  CHECK(parse_graph("2 1\n0 1") == k2);
  CHECK(to_edge_list(testing::path(3)) == "3 2\n0 1\n1 2\n");
  CHECK(from_edge_list(to_edge_list(testing::gn(5))) == testing::gn(5));

  CHECK(parse_error_of("3 1\n0 3\n") == ErrorCode::ParseError);
  CHECK(parse_error_of("3 2\n0 1\n") == ErrorCode::ParseError);
  CHECK(parse_error_of("2 1\n0 x\n") == ErrorCode::ParseError);
  // Structural errors from Graph::build pass through unchanged.
  CHECK(parse_error_of("3 1\n0 1\n") == ErrorCode::Disconnected);
}

TEST_CASE("graph6 fixtures") {
  // Reference encodings produced by an independent graph6 writer.
  CHECK(to_graph6(testing::path(2)) == "A_");
  CHECK(to_graph6(testing::path(4)) == "Ch");
  CHECK(to_graph6(testing::cycle(5)) == "Dhc");
  CHECK(to_graph6(testing::complete(4)) == "C~");
  CHECK(to_graph6(testing::star(4)) == "Ds_");

  const Graph d = from_graph6("D?{");
  CHECK(testing::edges_of(d) == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(to_graph6(d) == "D?{");
  CHECK(from_graph6(">>graph6<<Ch") == testing::path(4));
  CHECK(parse_graph("Dhc\n") == testing::cycle(5));
}

TEST_CASE("graph6 errors") {
  CHECK(parse_error_of("C") == ErrorCode::ParseError);      // truncated
  CHECK(parse_error_of("A`") == ErrorCode::ParseError);     // nonzero padding bit
  CHECK(parse_error_of("C\x01\x01") == ErrorCode::ParseError);  // byte out of range
}

TEST_CASE("long graph6 header") {
  const Graph p70 = testing::path(70);
  const std::string text = to_graph6(p70);
  CHECK(text.substr(0, 4) == "~?@E");
  CHECK(from_graph6(text) == p70);
}

TEST_CASE("round trip over the default corpus") {
  const auto corpus = default_corpus();
  CHECK(corpus.size() > 100);
  for (const Instance& inst : corpus) {
    REQUIRE(from_graph6(to_graph6(inst.graph)) == inst.graph);
    REQUIRE(from_edge_list(to_edge_list(inst.graph)) == inst.graph);
  }
}

TEST_CASE("multiple graphs") {
  const auto gs = parse_graphs("A_\nCh\n\nDhc\n");
  REQUIRE(gs.size() == 3);
  CHECK(gs[2] == testing::cycle(5));
  CHECK(parse_graphs("2 1\n0 1\n").size() == 1);
}

TEST_CASE("dot output") {
  const std::string dot = to_dot(testing::path(2), "K2");
  CHECK(dot.find("graph K2") != std::string::npos);
  CHECK(dot.find("0 -- 1") != std::string::npos);
  const std::string tdot = to_dot(total(testing::path(2)));
  CHECK(tdot.find("original") != std::string::npos);
  CHECK(tdot.find("e0") != std::string::npos);
}

TEST_SUITE_END();
