#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mdimlab/graph.hpp"

namespace mdimlab {

enum class DerivedKind : std::uint8_t { Subdivision, Middle, Total };
enum class EdgeClass : std::uint8_t { SEdge, LEdge, OriginalEdge };

std::string_view to_string(DerivedKind kind) noexcept;
std::string_view to_string(EdgeClass cls) noexcept;

/// Where a vertex of a derived graph came from: an original vertex, or the
/// subdivision vertex of an original edge.
struct Provenance {
  enum class Source : std::uint8_t { Original, Subdivision } source = Source::Original;
  int index = 0;  // original vertex index or original edge index

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// S(G), M(G) or T(G) together with its provenance tables.
///
/// Original vertex v keeps index v; the subdivision vertex of edge e sits at
/// n(G) + e. `edge_class[j]` tags edge j of `graph`.
struct DerivedGraph {
  DerivedKind kind;
  Graph graph;
  int base_order = 0;
  int base_size = 0;
  std::vector<Provenance> provenance;
  std::vector<EdgeClass> edge_class;

  Vertex subdivision_vertex(EdgeId e) const noexcept { return base_order + e; }
  bool is_subdivision_vertex(Vertex v) const noexcept { return v >= base_order; }
};

DerivedGraph subdivision(const Graph& g);
DerivedGraph middle(const Graph& g);
DerivedGraph total(const Graph& g);
DerivedGraph derive(const Graph& g, DerivedKind kind);

/// L(G). Throws Error{TooSmall} for K2, whose line graph is a single vertex.
Graph line_graph(const Graph& g);

/// m(L(G)) = sum over v of C(deg v, 2).
long long line_graph_size(const Graph& g) noexcept;

struct IdentityCheck {
  std::string name;
  long long checked = 0;
  bool holds = true;
  std::string counterexample;  // empty when holds
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_hold() const noexcept;
};

/// Exhaustively compares distances in the constructed S(G) and M(G) with the
/// corresponding expressions in G:
///   vertex-vertex     d_S(x,y)     = 2 d(x,y)
///   vertex-subdiv     d_S(x,v_e)   = 2 d(x,e) + 1
///   subdiv-subdiv     d_S(v_e,v_f) = 2 d(e,f) + 2        (e != f)
///   vertex-s-edge     d_S(x,f)     in {2 d(x,e), 2 d(x,e) + 1}, f a half of e
///   middle-vertex     d_M(x,y)     = d(x,y) + 1          (x != y)
///   middle-subdiv     d_M(x,v_e)   = d(x,e) + 1          (x not on e)
///   middle-incident   d_M(x,v_e)   = 1                   (x on e)
IdentityReport check_distance_identities(const Graph& g);

}  // namespace mdimlab
