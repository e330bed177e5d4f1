// Serial vs OpenMP timings for the three hot kernels: all-pairs BFS, the
// exact dimension search and phi enumeration.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "mdimlab/families.hpp"
#include "mdimlab/solvers.hpp"
#include "mdimlab/transforms.hpp"

using namespace mdimlab;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel) {
  std::printf("%-44s %10.2f %10.2f %8.2fx\n", name.c_str(), serial, parallel, serial / parallel);
}

Graph random_graph(int n, int extra, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({static_cast<int>(rng() % v), v});
  for (int i = 0; i < extra; ++i) {
    const int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a != b) edges.push_back({a, b});
  }
  return Graph::build(n, edges);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-44s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

  for (const int n : {500, 2000}) {
    const Graph g = random_graph(n, 2 * n, 7);
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    row("all-pairs BFS n=" + std::to_string(n), best_of(3, [&] { all_pairs_distances_serial(n, adj); }),
        best_of(3, [&] { all_pairs_distances_parallel(n, adj); }));
  }

  struct Search {
    std::string name;
    Graph graph;
    DimensionKind kind;
  };
  const Search searches[] = {
      {"mdim S(G_7)", subdivision(generate({Family::Gn, 7}).graph).graph, DimensionKind::Mdim},
      {"dim T(K1,6)", total(generate({Family::Star, 6}).graph).graph, DimensionKind::Dim},
      {"mdim random cactus n=14", generate({Family::RandomCactus, 14, 3, 5}).graph, DimensionKind::Mdim},
      {"edim random graph n=16", random_graph(16, 10, 3), DimensionKind::Edim},
  };
  for (const auto& [name, g, kind] : searches) {
    row("search " + name, best_of(3, [&] { solve_dimension_serial(g, kind); }),
        best_of(3, [&] { solve_dimension(g, kind); }));
  }

  // phi enumeration has no separate serial entry point; one thread stands in.
  const Graph phi_graph = generate({Family::Gn, 6}).graph;
  const double phi_parallel = best_of(3, [&] { phi_of_graph(phi_graph); });
  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
  const double phi_serial = best_of(3, [&] { phi_of_graph(phi_graph); });
  omp_set_num_threads(threads);
  row("phi enumeration G_6", phi_serial, phi_parallel);
  return 0;
}
