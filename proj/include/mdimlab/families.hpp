#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mdimlab/graph.hpp"

namespace mdimlab {

enum class Family { Path, Cycle, Star, Complete, Gn, RandomTree, RandomCactus };

std::string_view to_string(Family family) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

/// `n` is the vertex count except for Star (number of leaves, K_{1,n}) and
/// Gn (number of z vertices, n + 2 vertices in total).
struct FamilySpec {
  Family family = Family::Path;
  int n = 2;
  int cycles = 0;          // RandomCactus only
  std::uint64_t seed = 0;  // random families only

  std::string describe() const;
};

struct Generated {
  Graph graph;
  std::map<std::string, Vertex> names;  // Gn: x, y, z1..zn
};

/// Throws Error{BadSpec} for out-of-range parameters.
Generated generate(const FamilySpec& spec);

/// Random source for the random families: std::mt19937_64 (fully specified by
/// the C++ standard) seeded with the FamilySpec seed. Bounded draws use rejection
/// sampling on the raw 64-bit output, so sequences do not depend on the
/// standard library's distribution implementations.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Labelled tree from a Prüfer sequence over 0..n-1 (length n - 2).
Graph tree_from_pruefer(int n, const std::vector<int>& sequence);

/// Isomorphism-invariant encoding of a tree, rooted at its centre (or the
/// smaller encoding of the two centres).
std::string tree_canonical_form(const Graph& tree);

/// All non-isomorphic trees on n vertices (2 <= n <= 10), in order of their
/// canonical forms, each relabelled in preorder of the canonical rooting.
std::vector<Graph> enumerate_small_trees(int n);

}  // namespace mdimlab
