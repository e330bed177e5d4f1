#include <algorithm>
#include <random>

#include "doctest.h"
#include "mdimlab/families.hpp"
#include "mdimlab/solvers.hpp"
#include "mdimlab/structural.hpp"
#include "support.hpp"

using namespace mdimlab;

namespace {

oracle::Kind to_oracle(DimensionKind k) {
  switch (k) {
    case DimensionKind::Dim: return oracle::Kind::Dim;
    case DimensionKind::Edim: return oracle::Kind::Edim;
    case DimensionKind::Mdim: return oracle::Kind::Mdim;
  }
  return oracle::Kind::Dim;
}

constexpr DimensionKind kKinds[] = {DimensionKind::Dim, DimensionKind::Edim, DimensionKind::Mdim};

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::BadSpec;
}

}  // namespace

TEST_SUITE_BEGIN("metric_solvers");

TEST_CASE("signature") {
  const Graph p3 = testing::path(3);
  const std::vector<Vertex> w0{0}, w2{2};
  CHECK(signature(p3, MixedElement::vertex(0), w0) == std::vector<int>{0});
  CHECK(signature(p3, MixedElement::edge(*p3.edge_index(0, 1)), w2) == std::vector<int>{1});
  const Graph g2 = testing::gn(2);
  const std::vector<Vertex> xy{0, 1};
  CHECK(signature(g2, MixedElement::vertex(2), xy) == std::vector<int>{1, 1});
}

TEST_CASE("verifiers on small examples") {
  for (int n = 2; n <= 9; ++n) {
    const std::vector<Vertex> leaf{0};
    CHECK(is_resolving(testing::path(n), leaf));
  }
  const std::vector<Vertex> zero{0};
  CHECK_FALSE(is_resolving(testing::cycle(4), zero));

  // S(G_2): base order 4; edges (0,1),(0,2),(0,3),(1,2),(1,3) get subdivision
  // vertices 4..8, so v_{xz1}=5, v_{xz2}=6, v_{yz1}=7.
  const DerivedGraph s = subdivision(testing::gn(2));
  const std::vector<Vertex> witness{5, 6, 7};
  CHECK(is_mixed_resolving(s.graph, witness));
}

TEST_CASE("forced vertices") {
  CHECK(forced_vertices_mdim(testing::star(3)) == std::vector<Vertex>{1, 2, 3});
  for (int n = 2; n <= 6; ++n) CHECK(forced_vertices_mdim(testing::complete(n)).size() == static_cast<std::size_t>(n));
  CHECK(forced_vertices_mdim(testing::path(4)) == std::vector<Vertex>{0, 3});
  CHECK(forced_vertices_mdim(testing::cycle(5)).empty());
}

TEST_CASE("two-hub point values") {
  CHECK(solve_dimension(testing::gn(2), DimensionKind::Mdim).value == 4);
  CHECK(solve_dimension(subdivision(testing::gn(2)).graph, DimensionKind::Mdim).value == 3);
  CHECK(solve_dimension(total(testing::star(5)).graph, DimensionKind::Dim).value == 4);
}

TEST_CASE("mdim of trees equals the leaf count") {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& t : enumerate_small_trees(n)) {
      CHECK(solve_dimension(t, DimensionKind::Mdim).value == leaf_count(t));
    }
  }
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Graph t = generate({Family::RandomTree, 10, 0, seed}).graph;
    CHECK(solve_dimension(t, DimensionKind::Mdim).value == leaf_count(t));
  }
  CHECK(solve_dimension(testing::path(2), DimensionKind::Mdim).value == 2);
}

TEST_CASE("solver returns the lexicographically first minimum witness") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = testing::random_connected(rng, n, static_cast<int>(rng() % 5));
    for (const DimensionKind kind : kKinds) {
      const auto expected = oracle::brute_basis(n, testing::edge_list(g), to_oracle(kind));
      const Certificate c = solve_dimension(g, kind);
      INFO("kind=" << to_string(kind) << " n=" << n);
      CHECK(c.set == expected);
      CHECK(c.value == static_cast<int>(expected.size()));
      CHECK(verifies(g, kind, c.set));
    }
  }
}

TEST_CASE("parallel search matches the serial reference") {
  std::vector<Graph> graphs{subdivision(testing::gn(6)).graph, middle(testing::cycle(6)).graph,
                            total(testing::star(6)).graph, testing::cycle(9)};
  std::mt19937_64 rng(8);
  for (int i = 0; i < 6; ++i) graphs.push_back(testing::random_connected(rng, 14, 6));
  for (const Graph& g : graphs) {
    for (const DimensionKind kind : kKinds) {
      const Certificate serial = solve_dimension_serial(g, kind);
      const Certificate parallel = solve_dimension(g, kind, {.parallel = true});
      CHECK(serial == parallel);
      CHECK(solve_dimension(g, kind) == serial);  // repeated runs are identical
    }
  }
}

TEST_CASE("budget accounting") {
  const Graph s7 = subdivision(testing::gn(7)).graph;
  CHECK(error_of([&] { solve_dimension(s7, DimensionKind::Mdim, {.budget = 10}); }) ==
        ErrorCode::SearchBudgetExceeded);
  CHECK(error_of([&] { solve_dimension_serial(s7, DimensionKind::Mdim, 10); }) == ErrorCode::SearchBudgetExceeded);

  const Graph s5 = subdivision(testing::gn(5)).graph;
  const Certificate c = solve_dimension(s5, DimensionKind::Mdim);
  CHECK(solve_dimension(s5, DimensionKind::Mdim, {.budget = c.verifications}) == c);
  CHECK(error_of([&] { solve_dimension(s5, DimensionKind::Mdim, {.budget = c.verifications - 1}); }) ==
        ErrorCode::SearchBudgetExceeded);
}

TEST_CASE("verifier agrees with the set-based oracle on random samples") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    const Graph g = testing::random_connected(rng, n, static_cast<int>(rng() % 10));
    const auto d = oracle::bfs_all(oracle::adjacency(n, testing::edge_list(g)));
    std::vector<Vertex> w;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 3 == 0) w.push_back(v);
    }
    if (w.empty()) w.push_back(0);
    for (const DimensionKind kind : kKinds) {
      REQUIRE(verifies(g, kind, w) == oracle::resolves(n, testing::edge_list(g), d, to_oracle(kind), w));
    }
  }
}

TEST_CASE("superset monotonicity over 1000 random samples") {
  std::mt19937_64 rng(41);
  int verified = 0;
  for (int sample = 0; sample < 1000; ++sample) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const Graph g = testing::random_connected(rng, n, static_cast<int>(rng() % 8));
    std::vector<Vertex> w;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 2) w.push_back(v);
    }
    if (w.empty()) w.push_back(static_cast<Vertex>(rng() % n));
    std::vector<Vertex> super = w;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 2 && !std::binary_search(w.begin(), w.end(), v)) super.push_back(v);
    }
    std::sort(super.begin(), super.end());
    for (const DimensionKind kind : kKinds) {
      if (verifies(g, kind, w)) {
        ++verified;
        REQUIRE(verifies(g, kind, super));
      }
    }
  }
  CHECK(verified > 300);
}

TEST_CASE("dimension ordering and forced vertices") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = testing::random_connected(rng, n, static_cast<int>(rng() % 7));
    const int dim = solve_dimension(g, DimensionKind::Dim).value;
    const int edim = solve_dimension(g, DimensionKind::Edim).value;
    const Certificate mixed = solve_dimension(g, DimensionKind::Mdim);
    CHECK(std::max(dim, edim) <= mixed.value);
    CHECK(twin_lower_bound(g) <= dim);
    CHECK(std::includes(mixed.set.begin(), mixed.set.end(), mixed.forced.begin(), mixed.forced.end()));
    for (const Vertex f : mixed.forced) {
      std::vector<Vertex> without;
      std::copy_if(mixed.set.begin(), mixed.set.end(), std::back_inserter(without), [&](Vertex x) { return x != f; });
      CHECK_FALSE(is_mixed_resolving(g, without));
    }
  }
}

TEST_CASE("phi of a basis") {
  const DerivedGraph sp3 = subdivision(testing::path(3));  // P5: 0-3-1-4-2
  const std::vector<Vertex> x{2, 3};
  CHECK(phi_of_basis(sp3, x) == std::vector<Vertex>{0, 1, 2});
  const std::vector<Vertex> leaf{0};
  CHECK(phi_of_basis(sp3, leaf) == std::vector<Vertex>{0});
  const std::vector<Vertex> centre{1};
  CHECK(error_of([&] { phi_of_basis(sp3, centre); }) == ErrorCode::NotABasis);

  const DerivedGraph sg2 = subdivision(testing::gn(2));
  const std::vector<Vertex> witness{5, 6, 7};
  CHECK(phi_of_basis(sg2, witness) == std::vector<Vertex>{0, 1, 2, 3});
}

namespace {

// phi(G) by enumerating every vertex subset of S(G) with the set-based oracle.
int brute_phi(const Graph& g, int* bases = nullptr) {
  const int n = g.order();
  const auto es = oracle::subdivide(n, testing::edge_list(g));
  const int ns = n + g.size();
  const auto d = oracle::bfs_all(oracle::adjacency(ns, es));
  for (int k = 1; k <= ns; ++k) {
    int best = -1, count = 0;
    for (const auto& x : oracle::subsets(ns, k)) {
      if (!oracle::resolves(ns, es, d, oracle::Kind::Dim, x)) continue;
      ++count;
      std::set<int> image;
      for (const int v : x) {
        if (v < n) {
          image.insert(v);
        } else {
          image.insert(g.edge(v - n).u);
          image.insert(g.edge(v - n).v);
        }
      }
      const int size = static_cast<int>(image.size());
      if (best < 0 || size < best) best = size;
    }
    if (count > 0) {
      if (bases) *bases = count;
      return best;
    }
  }
  return -1;
}

}  // namespace

TEST_CASE("phi of a graph") {
  SUBCASE("K2: S(K2) = P3 has exactly the two leaves as bases") {
    const PhiResult r = phi_of_graph(testing::path(2));
    CHECK(r.phi_value == 1);
    CHECK(r.bases_enumerated == 2);
    CHECK(r.basis_size == 1);
  }
  SUBCASE("P3 against enumeration") {
    int bases = 0;
    const int expected = brute_phi(testing::path(3), &bases);
    const PhiResult r = phi_of_graph(testing::path(3));
    CHECK(r.phi_value == expected);
    CHECK(r.bases_enumerated == static_cast<std::uint64_t>(bases));
    CHECK(r.phi_value >= 1);
  }
  SUBCASE("G_2 against enumeration and the subdivision bound") {
    const Graph g2 = testing::gn(2);
    const PhiResult r = phi_of_graph(g2);
    CHECK(r.phi_value == brute_phi(g2));
    CHECK(r.phi_value <= 2 * 3);
    CHECK(static_cast<int>(r.witness_phi_set.size()) == r.phi_value);
  }
  SUBCASE("random graphs against enumeration") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 15; ++trial) {
      const Graph g = testing::random_connected(rng, 2 + static_cast<int>(rng() % 4), static_cast<int>(rng() % 3));
      if (g.order() + g.size() > 12) continue;
      int bases = 0;
      const int expected = brute_phi(g, &bases);
      const PhiResult r = phi_of_graph(g);
      CHECK(r.phi_value == expected);
      CHECK(r.bases_enumerated == static_cast<std::uint64_t>(bases));
    }
  }
  SUBCASE("enumeration cap") {
    CHECK(error_of([] { phi_of_graph(testing::gn(5), {.enumeration_cap = 5}); }) == ErrorCode::EnumerationOverflow);
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(24, 7) == 346104);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_SUITE_END();
