#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mdimlab/error.hpp"

namespace mdimlab {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool has_endpoint(Vertex x) const noexcept { return u == x || v == x; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Hop-count table for an unweighted connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}

  int order() const noexcept { return n_; }
  int operator()(Vertex u, Vertex v) const noexcept { return d_[index(u, v)]; }
  int& at(Vertex u, Vertex v) noexcept { return d_[index(u, v)]; }
  std::span<const int> row(Vertex u) const noexcept {
    return {d_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
  }
  int diameter() const noexcept;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const noexcept {
    return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<int> d_;
};

/// Simple connected undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted, so the edge index is the
/// position in that list and does not depend on input order. The distance
/// matrix is computed once at construction and shared by copies.
class Graph {
 public:
  /// Canonicalizes `edges` (orients u < v, sorts, drops duplicates).
  /// Throws Error{VertexOutOfRange, LoopEdge, TooSmall, Disconnected}.
  static Graph build(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const noexcept { return edges_[e]; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[v]; }
  int degree(Vertex v) const noexcept { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const noexcept;
  std::optional<EdgeId> edge_index(Vertex u, Vertex v) const noexcept;

  const DistanceMatrix& distances() const noexcept { return *distances_; }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::shared_ptr<const DistanceMatrix> distances_;
};

enum class ElementKind : std::uint8_t { Vertex, Edge };

/// A vertex or an edge of a graph, the unit a mixed resolving set separates.
struct MixedElement {
  ElementKind kind = ElementKind::Vertex;
  int index = 0;

  static MixedElement vertex(Vertex v) noexcept { return {ElementKind::Vertex, v}; }
  static MixedElement edge(EdgeId e) noexcept { return {ElementKind::Edge, e}; }
  friend auto operator<=>(const MixedElement&, const MixedElement&) = default;
};

// BFS from every source. The parallel variant distributes sources over
// OpenMP threads and produces the same table as the serial one.
DistanceMatrix all_pairs_distances_serial(int n, const std::vector<std::vector<Vertex>>& adjacency);
DistanceMatrix all_pairs_distances_parallel(int n, const std::vector<std::vector<Vertex>>& adjacency);

inline const DistanceMatrix& all_pairs_distances(const Graph& g) noexcept { return g.distances(); }

int vertex_edge_distance(const DistanceMatrix& d, const Graph& g, Vertex v, EdgeId e) noexcept;
int edge_edge_distance(const DistanceMatrix& d, const Graph& g, EdgeId e, EdgeId f) noexcept;
int mixed_distance(const DistanceMatrix& d, const Graph& g, MixedElement x, Vertex v) noexcept;

// Shorthands that use the graph's own distance table.
inline int vertex_edge_distance(const Graph& g, Vertex v, EdgeId e) noexcept {
  return vertex_edge_distance(g.distances(), g, v, e);
}
inline int edge_edge_distance(const Graph& g, EdgeId e, EdgeId f) noexcept {
  return edge_edge_distance(g.distances(), g, e, f);
}
inline int mixed_distance(const Graph& g, MixedElement x, Vertex v) noexcept {
  return mixed_distance(g.distances(), g, x, v);
}

}  // namespace mdimlab
