#include "mdimlab/graph.hpp"

#include <algorithm>
#include <string>

namespace mdimlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::EnumerationOverflow: return "EnumerationOverflow";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::NotCactus: return "NotCactus";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
    case ErrorCode::BadSpec: return "BadSpec";
  }
  return "Unknown";
}

int DistanceMatrix::diameter() const noexcept {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

namespace {

constexpr int kUnreached = -1;

void bfs_row(const std::vector<std::vector<Vertex>>& adjacency, Vertex source, std::span<int> dist,
             std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (const Vertex w : adjacency[u]) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

DistanceMatrix all_pairs_distances_serial(int n, const std::vector<std::vector<Vertex>>& adjacency) {
  DistanceMatrix d(n);
  std::vector<int> row(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    bfs_row(adjacency, s, row, queue);
    for (Vertex t = 0; t < n; ++t) d.at(s, t) = row[t];
  }
  return d;
}

DistanceMatrix all_pairs_distances_parallel(int n, const std::vector<std::vector<Vertex>>& adjacency) {
  DistanceMatrix d(n);
#pragma omp parallel if (n >= 64)
  {
    std::vector<int> row(n);
    std::vector<Vertex> queue;
    queue.reserve(n);
#pragma omp for schedule(dynamic, 8)
    for (Vertex s = 0; s < n; ++s) {
      bfs_row(adjacency, s, row, queue);
      for (Vertex t = 0; t < n; ++t) d.at(s, t) = row[t];
    }
  }
  return d;
}

Graph Graph::build(int n, std::vector<Edge> edges) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "graph needs at least 2 vertices, got " + std::to_string(n));
  for (Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adjacency_.assign(n, {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());

  auto d = std::make_shared<DistanceMatrix>(all_pairs_distances_parallel(n, g.adjacency_));
  for (Vertex v = 0; v < n; ++v) {
    if ((*d)(0, v) < 0) {
      throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(v) + " unreachable from vertex 0");
    }
  }
  g.distances_ = std::move(d);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<EdgeId> Graph::edge_index(Vertex u, Vertex v) const noexcept {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

int vertex_edge_distance(const DistanceMatrix& d, const Graph& g, Vertex v, EdgeId e) noexcept {
  const Edge& ed = g.edge(e);
  return std::min(d(v, ed.u), d(v, ed.v));
}

int edge_edge_distance(const DistanceMatrix& d, const Graph& g, EdgeId e, EdgeId f) noexcept {
  const Edge& a = g.edge(e);
  const Edge& b = g.edge(f);
  return std::min({d(a.u, b.u), d(a.u, b.v), d(a.v, b.u), d(a.v, b.v)});
}

int mixed_distance(const DistanceMatrix& d, const Graph& g, MixedElement x, Vertex v) noexcept {
  return x.kind == ElementKind::Vertex ? d(x.index, v) : vertex_edge_distance(d, g, v, x.index);
}

}  // namespace mdimlab
