#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "mdimlab/graph.hpp"
#include "mdimlab/solvers.hpp"

namespace mdimlab {

int leaf_count(const Graph& g) noexcept;
bool is_tree(const Graph& g) noexcept;

/// A cycle block of a cactus.
struct CycleInfo {
  std::vector<Vertex> vertices;  // in cyclic order, starting at the smallest vertex
  int rt = 0;                    // cycle vertices of degree >= 3 in G
  bool has_geodesic_triple = false;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
  std::vector<Vertex> roots(const Graph& g) const;
};

struct CactusReport {
  int n1 = 0;
  std::vector<CycleInfo> cycles;  // sorted by first vertex
  int epsilon = 0;
  int mdim_formula = 0;
};

/// Blocks of `g` as edge-index lists (lowpoint traversal), each sorted,
/// ordered by smallest edge index.
std::vector<std::vector<EdgeId>> biconnected_components(const Graph& g);

/// Throws Error{NotCactus} if some block is neither a bridge nor a cycle.
CactusReport cactus_decompose(const Graph& g);
bool is_cactus(const Graph& g);

/// d(u,v) + d(v,w) + d(w,u) == |V(C)| with distances taken in G.
bool is_geodesic_triple(const Graph& g, const CycleInfo& c, Vertex u, Vertex v, Vertex w) noexcept;

enum class Claim { MdimCactus, MdimTree, DimMiddleTree, MdimTotalTree, DimTotalTreeBounds };

std::string_view to_string(Claim claim) noexcept;

struct BoundPair {
  int lower = 0;
  int upper = 0;
  friend bool operator==(const BoundPair&, const BoundPair&) = default;
};

using ClosedFormValue = std::variant<int, BoundPair>;

/// Formula value for a class claim. Only DimTotalTreeBounds runs the solver
/// (for its dim(G) lower end); the rest are arithmetic on structure.
/// Throws Error{ClassMismatch}.
ClosedFormValue closed_form(const Graph& g, Claim claim, const SearchOptions& options = {});

/// Facts about the two-hub family G_n (x = 0, y = 1, z_i = 1 + i).
struct GnFacts {
  int n = 0;
  int mdim_formula = 0;                 // n + 2, every vertex forced
  std::optional<std::vector<Vertex>> s_n;  // vertices of S(G_n), n >= 5
  // n >= 5: mdim(G_n) - mdim(S(G_n)) >= mdim_formula - |S_n| = 2
  std::optional<int> gap_lower_bound;
};

GnFacts gn_family_facts(int n);

/// True if `g` is G_n for some n >= 2 under some labelling; returns that n.
std::optional<int> recognize_gn(const Graph& g);

}  // namespace mdimlab
