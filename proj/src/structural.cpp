#include "mdimlab/structural.hpp"

#include <algorithm>
#include <string>

#include "mdimlab/transforms.hpp"

namespace mdimlab {

int leaf_count(const Graph& g) noexcept {
  int n1 = 0;
  for (Vertex v = 0; v < g.order(); ++v) n1 += g.degree(v) == 1;
  return n1;
}

bool is_tree(const Graph& g) noexcept { return g.size() == g.order() - 1; }

std::vector<Vertex> CycleInfo::roots(const Graph& g) const {
  std::vector<Vertex> out;
  for (const Vertex v : vertices) {
    if (g.degree(v) >= 3) out.push_back(v);
  }
  return out;
}

namespace {

struct BlockFinder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<EdgeId> stack;
  std::vector<std::vector<EdgeId>> blocks;
  int timer = 0;

  explicit BlockFinder(const Graph& graph) : g(graph), disc(graph.order(), -1), low(graph.order(), 0) {}

  void visit(Vertex u, EdgeId via) {
    disc[u] = low[u] = timer++;
    for (const Vertex w : g.neighbors(u)) {
      const EdgeId e = *g.edge_index(u, w);
      if (e == via) continue;
      if (disc[w] == -1) {
        stack.push_back(e);
        visit(w, e);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) pop_block(e);
      } else if (disc[w] < disc[u]) {
        stack.push_back(e);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  }

  void pop_block(EdgeId until) {
    std::vector<EdgeId> block;
    while (true) {
      const EdgeId e = stack.back();
      stack.pop_back();
      block.push_back(e);
      if (e == until) break;
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
};

CycleInfo walk_cycle(const Graph& g, const std::vector<EdgeId>& block) {
  // Each vertex of a cycle block has exactly two block edges.
  std::vector<std::pair<Vertex, Vertex>> next;
  std::vector<Vertex> verts;
  for (const EdgeId e : block) {
    verts.push_back(g.edge(e).u);
    verts.push_back(g.edge(e).v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto local = [&](Vertex v) { return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()); };
  std::vector<std::vector<Vertex>> nb(verts.size());
  for (const EdgeId e : block) {
    nb[local(g.edge(e).u)].push_back(g.edge(e).v);
    nb[local(g.edge(e).v)].push_back(g.edge(e).u);
  }

  CycleInfo c;
  Vertex prev = verts.front();
  Vertex cur = std::min(nb[0][0], nb[0][1]);
  c.vertices.push_back(prev);
  while (cur != verts.front()) {
    c.vertices.push_back(cur);
    const auto& opts = nb[local(cur)];
    const Vertex nxt = opts[0] == prev ? opts[1] : opts[0];
    prev = cur;
    cur = nxt;
  }
  for (const Vertex v : c.vertices) c.rt += g.degree(v) >= 3;
  return c;
}

}  // namespace

std::vector<std::vector<EdgeId>> biconnected_components(const Graph& g) {
  BlockFinder finder(g);
  finder.visit(0, -1);
  auto blocks = std::move(finder.blocks);
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

bool is_geodesic_triple(const Graph& g, const CycleInfo& c, Vertex u, Vertex v, Vertex w) noexcept {
  const DistanceMatrix& d = g.distances();
  return d(u, v) + d(v, w) + d(w, u) == c.length();
}

CactusReport cactus_decompose(const Graph& g) {
  CactusReport report;
  report.n1 = leaf_count(g);
  for (const auto& block : biconnected_components(g)) {
    if (block.size() == 1) continue;
    std::vector<Vertex> verts;
    for (const EdgeId e : block) {
      verts.push_back(g.edge(e).u);
      verts.push_back(g.edge(e).v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() != block.size()) {
      throw Error(ErrorCode::NotCactus, "block with " + std::to_string(verts.size()) + " vertices and " +
                                            std::to_string(block.size()) + " edges is not a cycle");
    }
    CycleInfo c = walk_cycle(g, block);
    if (c.rt >= 3) {
      const auto r = c.roots(g);
      for (std::size_t i = 0; i < r.size() && !c.has_geodesic_triple; ++i)
        for (std::size_t j = i + 1; j < r.size() && !c.has_geodesic_triple; ++j)
          for (std::size_t k = j + 1; k < r.size() && !c.has_geodesic_triple; ++k)
            c.has_geodesic_triple = is_geodesic_triple(g, c, r[i], r[j], r[k]);
    }
    report.cycles.push_back(std::move(c));
  }
  std::sort(report.cycles.begin(), report.cycles.end(),
            [](const CycleInfo& a, const CycleInfo& b) { return a.vertices < b.vertices; });

  report.mdim_formula = report.n1;
  for (const CycleInfo& c : report.cycles) {
    report.mdim_formula += std::max(3 - c.rt, 0);
    if (c.rt >= 3 && !c.has_geodesic_triple) ++report.epsilon;
  }
  report.mdim_formula += report.epsilon;
  return report;
}

bool is_cactus(const Graph& g) {
  try {
    cactus_decompose(g);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotCactus) throw;
    return false;
  }
}

std::string_view to_string(Claim claim) noexcept {
  switch (claim) {
    case Claim::MdimCactus: return "mdim-cactus";
    case Claim::MdimTree: return "mdim-tree";
    case Claim::DimMiddleTree: return "dim-middle-tree";
    case Claim::MdimTotalTree: return "mdim-total-tree";
    case Claim::DimTotalTreeBounds: return "dim-total-tree-bounds";
  }
  return "?";
}

ClosedFormValue closed_form(const Graph& g, Claim claim, const SearchOptions& options) {
  if (claim == Claim::MdimCactus) {
    try {
      return cactus_decompose(g).mdim_formula;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotCactus) throw Error(ErrorCode::ClassMismatch, "graph is not a cactus");
      throw;
    }
  }
  if (!is_tree(g)) throw Error(ErrorCode::ClassMismatch, std::string(to_string(claim)) + " needs a tree");
  const int n1 = leaf_count(g);
  switch (claim) {
    case Claim::MdimTree:
    case Claim::DimMiddleTree: return n1;
    case Claim::MdimTotalTree: return 2 * n1;
    case Claim::DimTotalTreeBounds:
      return BoundPair{solve_dimension(g, DimensionKind::Dim, options).value, n1};
    case Claim::MdimCactus: break;
  }
  return 0;
}

GnFacts gn_family_facts(int n) {
  if (n < 2) throw Error(ErrorCode::BadSpec, "G_n needs n >= 2");
  GnFacts f;
  f.n = n;
  f.mdim_formula = n + 2;
  if (n >= 5) {
    const int base = n + 2;
    auto v_xz = [&](int i) { return base + i; };      // edge (0, 1+i) has index i
    auto v_yz = [&](int i) { return base + n + i; };  // edge (1, 1+i) has index n+i
    std::vector<Vertex> s{v_xz(1), v_xz(2), v_yz(3), v_yz(4)};
    for (int i = 5; i <= n; ++i) s.push_back(1 + i);
    std::sort(s.begin(), s.end());
    f.gap_lower_bound = f.mdim_formula - static_cast<int>(s.size());
    f.s_n = std::move(s);
  }
  return f;
}

std::optional<int> recognize_gn(const Graph& g) {
  const int n = g.order() - 2;
  if (n < 2 || g.size() != 2 * n + 1) return std::nullopt;
  std::vector<Vertex> hubs;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == n + 1) {
      hubs.push_back(v);
    } else if (g.degree(v) != 2) {
      return std::nullopt;
    }
  }
  if (hubs.size() != 2 || !g.adjacent(hubs[0], hubs[1])) return std::nullopt;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == hubs[0] || v == hubs[1]) continue;
    if (!g.adjacent(v, hubs[0]) || !g.adjacent(v, hubs[1])) return std::nullopt;
  }
  return n;
}

}  // namespace mdimlab
