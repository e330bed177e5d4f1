#include <algorithm>
#include <limits>

#include "mdimlab/solvers.hpp"

namespace mdimlab {

std::string_view to_string(DimensionKind kind) noexcept {
  switch (kind) {
    case DimensionKind::Dim: return "dim";
    case DimensionKind::Edim: return "edim";
    case DimensionKind::Mdim: return "mdim";
  }
  return "?";
}

std::vector<int> signature(const Graph& g, MixedElement x, std::span<const Vertex> w) {
  std::vector<int> sig;
  sig.reserve(w.size());
  for (const Vertex v : w) sig.push_back(mixed_distance(g, x, v));
  return sig;
}

std::vector<MixedElement> element_universe(const Graph& g, DimensionKind kind) {
  std::vector<MixedElement> out;
  if (kind != DimensionKind::Edim) {
    for (Vertex v = 0; v < g.order(); ++v) out.push_back(MixedElement::vertex(v));
  }
  if (kind != DimensionKind::Dim) {
    for (EdgeId e = 0; e < g.size(); ++e) out.push_back(MixedElement::edge(e));
  }
  return out;
}

ResolvingTable::ResolvingTable(const Graph& g, DimensionKind kind) : kind_(kind), n_(g.order()) {
  const auto universe = element_universe(g, kind);
  universe_ = static_cast<int>(universe.size());
  radix_ = g.distances().diameter() + 1;
  column_.resize(static_cast<std::size_t>(n_) * universe_);
  for (Vertex w = 0; w < n_; ++w) {
    for (int i = 0; i < universe_; ++i) {
      column_[static_cast<std::size_t>(w) * universe_ + i] =
          static_cast<std::uint16_t>(mixed_distance(g, universe[i], w));
    }
  }
}

ResolvingTable::Scratch::Scratch(const ResolvingTable& table)
    : label(table.universe_),
      next(table.universe_),
      stamp(static_cast<std::size_t>(table.universe_) * table.radix_, 0),
      slot(static_cast<std::size_t>(table.universe_) * table.radix_, 0) {}

// Partition refinement: after processing w_1..w_j, two elements share a label
// iff their distance vectors to w_1..w_j agree. Labels stay below universe_,
// so label * radix + distance indexes the stamp table without collisions.
bool ResolvingTable::resolves(std::span<const Vertex> w, Scratch& scratch) const {
  if (universe_ <= 1) return !w.empty();
  std::fill(scratch.label.begin(), scratch.label.end(), 0);
  int classes = 1;
  for (const Vertex v : w) {
    if (++scratch.generation == 0) {
      std::fill(scratch.stamp.begin(), scratch.stamp.end(), 0);
      scratch.generation = 1;
    }
    const std::uint32_t gen = scratch.generation;
    const std::uint16_t* col = column_.data() + static_cast<std::size_t>(v) * universe_;
    int fresh = 0;
    for (int i = 0; i < universe_; ++i) {
      const std::size_t key = static_cast<std::size_t>(scratch.label[i]) * radix_ + col[i];
      if (scratch.stamp[key] != gen) {
        scratch.stamp[key] = gen;
        scratch.slot[key] = fresh++;
      }
      scratch.next[i] = scratch.slot[key];
    }
    scratch.label.swap(scratch.next);
    classes = fresh;
    if (classes == universe_) return true;
  }
  return classes == universe_;
}

bool ResolvingTable::resolves(std::span<const Vertex> w) const {
  Scratch scratch(*this);
  return resolves(w, scratch);
}

bool verifies(const Graph& g, DimensionKind kind, std::span<const Vertex> w) {
  return ResolvingTable(g, kind).resolves(w);
}

bool is_resolving(const Graph& g, std::span<const Vertex> w) { return verifies(g, DimensionKind::Dim, w); }
bool is_edge_resolving(const Graph& g, std::span<const Vertex> w) { return verifies(g, DimensionKind::Edim, w); }
bool is_mixed_resolving(const Graph& g, std::span<const Vertex> w) { return verifies(g, DimensionKind::Mdim, w); }

std::vector<Vertex> forced_vertices_mdim(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (const Vertex u : g.neighbors(v)) {
      // N[v] ⊆ N[u]: u is adjacent to v already, so check the other neighbours.
      const bool maximal = std::all_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                                       [&](Vertex x) { return x == u || g.adjacent(u, x); });
      if (maximal) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

int twin_lower_bound(const Graph& g) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  int bound = 0;
  auto open_minus = [&](Vertex a, Vertex b) {
    std::vector<Vertex> out;
    for (const Vertex x : g.neighbors(a)) {
      if (x != b) out.push_back(x);
    }
    return out;
  };
  for (Vertex u = 0; u < n; ++u) {
    if (cls[u] != -1) continue;
    cls[u] = u;
    int size = 1;
    for (Vertex v = u + 1; v < n; ++v) {
      if (cls[v] == -1 && open_minus(u, v) == open_minus(v, u)) {
        cls[v] = u;
        ++size;
      }
    }
    bound += size - 1;
  }
  return std::max(bound, 1);
}

std::uint64_t binomial(int n, int k) noexcept {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace mdimlab
