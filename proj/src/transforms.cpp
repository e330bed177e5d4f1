#include "mdimlab/transforms.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mdimlab {

std::string_view to_string(DerivedKind kind) noexcept {
  switch (kind) {
    case DerivedKind::Subdivision: return "subdivision";
    case DerivedKind::Middle: return "middle";
    case DerivedKind::Total: return "total";
  }
  return "?";
}

std::string_view to_string(EdgeClass cls) noexcept {
  switch (cls) {
    case EdgeClass::SEdge: return "S";
    case EdgeClass::LEdge: return "L";
    case EdgeClass::OriginalEdge: return "original";
  }
  return "?";
}

long long line_graph_size(const Graph& g) noexcept {
  long long total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const long long d = g.degree(v);
    total += d * (d - 1) / 2;
  }
  return total;
}

namespace {

// Pairs of distinct edge indices e < f sharing an endpoint, each pair once.
std::vector<Edge> incident_edge_pairs(const Graph& g) {
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(line_graph_size(g)));
  std::vector<EdgeId> at;
  for (Vertex v = 0; v < g.order(); ++v) {
    at.clear();
    for (const Vertex w : g.neighbors(v)) at.push_back(*g.edge_index(v, w));
    for (std::size_t i = 0; i < at.size(); ++i) {
      for (std::size_t j = i + 1; j < at.size(); ++j) pairs.push_back({at[i], at[j]});
    }
  }
  // In a simple graph two distinct edges share at most one endpoint.
  return pairs;
}

DerivedGraph construct(const Graph& g, DerivedKind kind) {
  const int n = g.order();
  const int m = g.size();
  std::map<Edge, EdgeClass> tagged;

  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    tagged[{ed.u, n + e}] = EdgeClass::SEdge;
    tagged[{ed.v, n + e}] = EdgeClass::SEdge;
  }
  if (kind != DerivedKind::Subdivision) {
    for (const Edge& p : incident_edge_pairs(g)) tagged[{n + p.u, n + p.v}] = EdgeClass::LEdge;
  }
  if (kind == DerivedKind::Total) {
    for (const Edge& ed : g.edges()) tagged[ed] = EdgeClass::OriginalEdge;
  }

  std::vector<Edge> edges;
  edges.reserve(tagged.size());
  for (const auto& [edge, cls] : tagged) edges.push_back(edge);

  DerivedGraph out{kind, Graph::build(n + m, edges), n, m, {}, {}};
  // std::map iterates in the same sorted order Graph::build uses.
  out.edge_class.reserve(tagged.size());
  for (const auto& [edge, cls] : tagged) out.edge_class.push_back(cls);

  out.provenance.reserve(n + m);
  for (Vertex v = 0; v < n; ++v) out.provenance.push_back({Provenance::Source::Original, v});
  for (EdgeId e = 0; e < m; ++e) out.provenance.push_back({Provenance::Source::Subdivision, e});
  return out;
}

}  // namespace

DerivedGraph subdivision(const Graph& g) { return construct(g, DerivedKind::Subdivision); }
DerivedGraph middle(const Graph& g) { return construct(g, DerivedKind::Middle); }
DerivedGraph total(const Graph& g) { return construct(g, DerivedKind::Total); }
DerivedGraph derive(const Graph& g, DerivedKind kind) { return construct(g, kind); }

Graph line_graph(const Graph& g) {
  if (g.size() < 2) throw Error(ErrorCode::TooSmall, "line graph of a single edge has one vertex");
  return Graph::build(g.size(), incident_edge_pairs(g));
}

bool IdentityReport::all_hold() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { check_.name = std::move(name); }

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++check_.checked;
    if (!ok && check_.holds) {
      check_.holds = false;
      check_.counterexample = describe();
    }
  }

  IdentityCheck take() { return std::move(check_); }

 private:
  IdentityCheck check_;
};

std::string describe(std::initializer_list<std::pair<const char*, long long>> fields) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : fields) {
    if (!first) os << ' ';
    os << key << '=' << value;
    first = false;
  }
  return os.str();
}

}  // namespace

IdentityReport check_distance_identities(const Graph& g) {
  const int n = g.order();
  const int m = g.size();
  const DistanceMatrix& d = g.distances();
  const DerivedGraph s = subdivision(g);
  const DerivedGraph mid = middle(g);
  const DistanceMatrix& ds = s.graph.distances();
  const DistanceMatrix& dm = mid.graph.distances();

  Recorder vv("vertex-vertex"), vs("vertex-subdiv"), ss("subdiv-subdiv"), ve("vertex-s-edge");
  Recorder mvv("middle-vertex"), mvs("middle-subdiv"), minc("middle-incident");

  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      vv.expect(ds(x, y) == 2 * d(x, y), [&] { return describe({{"x", x}, {"y", y}, {"dS", ds(x, y)}}); });
      if (x != y) {
        mvv.expect(dm(x, y) == d(x, y) + 1, [&] { return describe({{"x", x}, {"y", y}, {"dM", dm(x, y)}}); });
      }
    }
    for (EdgeId e = 0; e < m; ++e) {
      const Vertex ve_s = s.subdivision_vertex(e);
      const int dxe = vertex_edge_distance(d, g, x, e);
      vs.expect(ds(x, ve_s) == 2 * dxe + 1, [&] { return describe({{"x", x}, {"e", e}, {"dS", ds(x, ve_s)}}); });
      if (g.edge(e).has_endpoint(x)) {
        minc.expect(dm(x, ve_s) == 1, [&] { return describe({{"x", x}, {"e", e}, {"dM", dm(x, ve_s)}}); });
      } else {
        mvs.expect(dm(x, ve_s) == dxe + 1, [&] { return describe({{"x", x}, {"e", e}, {"dM", dm(x, ve_s)}}); });
      }
    }
  }

  for (EdgeId e = 0; e < m; ++e) {
    for (EdgeId f = 0; f < m; ++f) {
      if (e == f) continue;
      const int got = ds(s.subdivision_vertex(e), s.subdivision_vertex(f));
      ss.expect(got == 2 * edge_edge_distance(d, g, e, f) + 2,
                [&] { return describe({{"e", e}, {"f", f}, {"dS", got}}); });
    }
  }

  // Every S(G)-edge is a half (u, v_e) of some original edge e.
  for (EdgeId j = 0; j < s.graph.size(); ++j) {
    const Edge& half = s.graph.edge(j);
    const EdgeId e = s.provenance[half.v].index;
    for (Vertex x = 0; x < n; ++x) {
      const int got = vertex_edge_distance(ds, s.graph, x, j);
      const int base = 2 * vertex_edge_distance(d, g, x, e);
      ve.expect(got == base || got == base + 1,
                [&] { return describe({{"x", x}, {"s_edge", j}, {"e", e}, {"dS", got}}); });
    }
  }

  IdentityReport report;
  for (Recorder* r : {&vv, &vs, &ss, &ve, &mvv, &mvs, &minc}) report.checks.push_back(r->take());
  return report;
}

}  // namespace mdimlab
