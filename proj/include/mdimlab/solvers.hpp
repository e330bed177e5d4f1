#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mdimlab/graph.hpp"
#include "mdimlab/transforms.hpp"

namespace mdimlab {

enum class DimensionKind : std::uint8_t { Dim, Edim, Mdim };

std::string_view to_string(DimensionKind kind) noexcept;

/// Minimum witness of a dimension kind.
struct Certificate {
  DimensionKind kind = DimensionKind::Dim;
  std::vector<Vertex> set;     // sorted
  int value = 0;               // set.size()
  std::vector<Vertex> forced;  // maximal-neighbour vertices, Mdim only
  std::uint64_t verifications = 0;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Distance of every vertex of `g` to `x` restricted to the vertices in `w`.
std::vector<int> signature(const Graph& g, MixedElement x, std::span<const Vertex> w);

/// Elements a set of the given kind must separate: vertices (Dim), edges
/// (Edim), or vertices followed by edges (Mdim).
std::vector<MixedElement> element_universe(const Graph& g, DimensionKind kind);

/// Column-major distance table from each vertex to each universe element,
/// with an exact partition-refinement test for "W separates the universe".
/// Immutable once built; `Scratch` carries per-thread working memory.
class ResolvingTable {
 public:
  ResolvingTable(const Graph& g, DimensionKind kind);

  class Scratch {
   public:
    explicit Scratch(const ResolvingTable& table);

   private:
    friend class ResolvingTable;
    std::vector<int> label;
    std::vector<int> next;
    std::vector<std::uint32_t> stamp;
    std::vector<int> slot;
    std::uint32_t generation = 0;
  };

  bool resolves(std::span<const Vertex> w, Scratch& scratch) const;
  bool resolves(std::span<const Vertex> w) const;

  int universe_size() const noexcept { return universe_; }
  int order() const noexcept { return n_; }
  DimensionKind kind() const noexcept { return kind_; }

 private:
  DimensionKind kind_;
  int n_ = 0;
  int universe_ = 0;
  int radix_ = 1;               // diameter + 1
  std::vector<std::uint16_t> column_;  // column_[w * universe_ + i]
};

bool is_resolving(const Graph& g, std::span<const Vertex> w);
bool is_edge_resolving(const Graph& g, std::span<const Vertex> w);
bool is_mixed_resolving(const Graph& g, std::span<const Vertex> w);
bool verifies(const Graph& g, DimensionKind kind, std::span<const Vertex> w);

/// Vertices v having a neighbour u with N[v] ⊆ N[u]; every mixed resolving
/// set contains all of them.
std::vector<Vertex> forced_vertices_mdim(const Graph& g);

/// Lower bound on dim(G) from twin classes: a class of s mutual twins needs
/// s - 1 members in any resolving set.
int twin_lower_bound(const Graph& g);

struct SearchOptions {
  std::uint64_t budget = 100'000'000;  // subset verifications
  bool parallel = true;
};

/// Exact dimension by increasing cardinality, lexicographic order within a
/// cardinality; returns the lexicographically smallest minimum witness.
/// Throws Error{SearchBudgetExceeded, NoWitness}.
Certificate solve_dimension(const Graph& g, DimensionKind kind, const SearchOptions& options = {});

/// Single-threaded reference for solve_dimension; same result by contract.
Certificate solve_dimension_serial(const Graph& g, DimensionKind kind, std::uint64_t budget = 100'000'000);

struct PhiOptions {
  std::uint64_t enumeration_cap = 10'000'000;
  SearchOptions search;
};

struct PhiResult {
  int phi_value = 0;
  int basis_size = 0;  // dim(S(G))
  std::uint64_t bases_enumerated = 0;
  std::vector<Vertex> witness_basis;    // vertices of S(G)
  std::vector<Vertex> witness_phi_set;  // vertices of G
};

/// Original vertices in X plus both ends of every edge whose subdivision
/// vertex is in X. Throws Error{NotABasis} if X does not resolve S(G).
std::vector<Vertex> phi_of_basis(const DerivedGraph& sg, std::span<const Vertex> x);

/// Minimum |phi(X)| over all metric bases X of S(G).
/// Throws Error{EnumerationOverflow} when C(|V(S(G))|, dim S(G)) exceeds the cap.
PhiResult phi_of_graph(const Graph& g, const PhiOptions& options = {});

/// Number of k-subsets of an n-set, saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k) noexcept;

}  // namespace mdimlab
