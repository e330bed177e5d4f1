#pragma once

#include <random>

#include "mdimlab/families.hpp"
#include "mdimlab/graph.hpp"
#include "oracles.hpp"

namespace testing {

inline mdimlab::Graph path(int n) { return mdimlab::generate({mdimlab::Family::Path, n}).graph; }
inline mdimlab::Graph cycle(int n) { return mdimlab::generate({mdimlab::Family::Cycle, n}).graph; }
inline mdimlab::Graph star(int k) { return mdimlab::generate({mdimlab::Family::Star, k}).graph; }
inline mdimlab::Graph complete(int n) { return mdimlab::generate({mdimlab::Family::Complete, n}).graph; }
inline mdimlab::Graph gn(int n) { return mdimlab::generate({mdimlab::Family::Gn, n}).graph; }

inline std::vector<mdimlab::Edge> edges_of(const mdimlab::Graph& g) { return {g.edges().begin(), g.edges().end()}; }

inline oracle::EdgeList edge_list(const mdimlab::Graph& g) {
  oracle::EdgeList out;
  for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

// Connected graph: random spanning tree plus extra random edges.
inline mdimlab::Graph random_connected(std::mt19937_64& rng, int n, int extra) {
  std::vector<mdimlab::Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({static_cast<int>(rng() % v), v});
  for (int i = 0; i < extra; ++i) {
    const int a = static_cast<int>(rng() % n);
    const int b = static_cast<int>(rng() % n);
    if (a != b) edges.push_back({a, b});
  }
  return mdimlab::Graph::build(n, edges);
}

}  // namespace testing
