#include <algorithm>
#include <random>

#include "doctest.h"
#include "mdimlab/graph.hpp"
#include "support.hpp"

using namespace mdimlab;

TEST_SUITE_BEGIN("graph_core");

TEST_CASE("build canonicalizes and rejects bad input") {
  const Graph k2 = Graph::build(2, {{1, 0}});
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(k2.edge(0) == Edge{0, 1});

  SUBCASE("duplicates and orientation collapse") {
    const Graph g = Graph::build(3, {{2, 1}, {0, 1}, {1, 2}, {1, 0}});
    REQUIRE(g.size() == 2);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{1, 2});
  }

  SUBCASE("errors") {
    auto code_of = [](auto&& fn) {
      try {
        fn();
      } catch (const Error& e) {
        return e.code();
      }
      FAIL("no error thrown");
      return ErrorCode::BadSpec;
    };
    CHECK(code_of([] { Graph::build(3, {{0, 1}}); }) == ErrorCode::Disconnected);
    CHECK(code_of([] { Graph::build(2, {{0, 0}, {0, 1}}); }) == ErrorCode::LoopEdge);
    CHECK(code_of([] { Graph::build(1, {}); }) == ErrorCode::TooSmall);
    CHECK(code_of([] { Graph::build(3, {{0, 3}}); }) == ErrorCode::VertexOutOfRange);
  }

  SUBCASE("G_5 has 7 vertices and 11 edges") {
    const Graph g5 = testing::gn(5);
    CHECK(g5.order() == 7);
    CHECK(g5.size() == 11);
  }
}

TEST_CASE("all pairs distances") {
  CHECK(testing::path(4).distances()(0, 3) == 3);
  CHECK(testing::path(2).distances()(0, 1) == 1);
  CHECK(testing::cycle(6).distances()(0, 3) == 3);
}

TEST_CASE("element distances") {
  const Graph p4 = testing::path(4);
  const EdgeId e23 = *p4.edge_index(2, 3);
  CHECK(vertex_edge_distance(p4, 0, e23) == 2);
  CHECK(vertex_edge_distance(p4, 2, e23) == 0);
  CHECK(edge_edge_distance(p4, *p4.edge_index(0, 1), e23) == 1);
  CHECK(edge_edge_distance(p4, e23, e23) == 0);
  CHECK(mixed_distance(p4, MixedElement::vertex(0), 0) == 0);
  CHECK(mixed_distance(p4, MixedElement::edge(*p4.edge_index(1, 2)), 0) == 1);

  // Expected values below come from the BFS oracle, not the library table.
  const Graph c6 = testing::cycle(6);
  const auto dc6 = oracle::bfs_all(oracle::adjacency(6, testing::edge_list(c6)));
  CHECK(vertex_edge_distance(c6, 0, *c6.edge_index(2, 3)) == std::min(dc6[0][2], dc6[0][3]));
  CHECK(vertex_edge_distance(c6, 0, *c6.edge_index(2, 3)) == 2);

  const Graph g2 = testing::gn(2);  // x=0, y=1, z1=2, z2=3
  const auto dg2 = oracle::bfs_all(oracle::adjacency(4, testing::edge_list(g2)));
  int brute = 99;
  for (const int a : {0, 2})
    for (const int b : {1, 3}) brute = std::min(brute, dg2[a][b]);
  CHECK(brute == 1);
  CHECK(edge_edge_distance(g2, *g2.edge_index(0, 2), *g2.edge_index(1, 3)) == brute);

  const Graph g5 = testing::gn(5);
  CHECK(mixed_distance(g5, MixedElement::edge(*g5.edge_index(0, 1)), 4) == 1);
}

TEST_CASE("distance matrix invariants on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 49);
    const Graph g = testing::random_connected(rng, n, static_cast<int>(rng() % (2 * n)));
    const DistanceMatrix& d = g.distances();
    const auto ref = oracle::bfs_all(oracle::adjacency(n, testing::edge_list(g)));
    for (int u = 0; u < n; ++u) {
      CHECK(d(u, u) == 0);
      for (int v = 0; v < n; ++v) {
        REQUIRE(d(u, v) == ref[u][v]);
        REQUIRE(d(u, v) == d(v, u));
        for (int w = 0; w < n; ++w) REQUIRE(d(u, w) <= d(u, v) + d(v, w));
      }
    }
    for (EdgeId e = 0; e < g.size(); ++e) {
      for (Vertex v = 0; v < n; ++v) REQUIRE((vertex_edge_distance(g, v, e) == 0) == g.edge(e).has_endpoint(v));
      for (EdgeId f = 0; f < g.size(); ++f) {
        const bool touch = e == f || g.edge(e).has_endpoint(g.edge(f).u) || g.edge(e).has_endpoint(g.edge(f).v);
        REQUIRE((edge_edge_distance(g, e, f) == 0) == touch);
      }
    }
  }
}

TEST_CASE("serial and parallel BFS agree") {
  std::mt19937_64 rng(5);
  for (const int n : {2, 30, 90, 200}) {
    const Graph g = testing::random_connected(rng, n, n);
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    CHECK(all_pairs_distances_serial(n, adj) == all_pairs_distances_parallel(n, adj));
  }
}

TEST_CASE("edge indices do not depend on input order") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_connected(rng, 12, 10);
    std::vector<Edge> shuffled;
    for (const Edge& e : g.edges()) shuffled.push_back(rng() % 2 ? e : Edge{e.v, e.u});
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Graph h = Graph::build(12, shuffled);
    REQUIRE(h == g);
    for (EdgeId e = 0; e < g.size(); ++e) CHECK(h.edge_index(g.edge(e).u, g.edge(e).v) == e);
  }
}

TEST_SUITE_END();
