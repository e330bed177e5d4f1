#pragma once

// Brute-force reference computations. These deliberately avoid the library's
// distance table and ResolvingTable so they can check them independently.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Adj = std::vector<std::vector<int>>;
using EdgeList = std::vector<std::pair<int, int>>;

inline Adj adjacency(int n, const EdgeList& edges) {
  Adj adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

inline std::vector<std::vector<int>> bfs_all(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    q.push(s);
    d[s][s] = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const int w : adj[u]) {
        if (d[s][w] < 0) {
          d[s][w] = d[s][u] + 1;
          q.push(w);
        }
      }
    }
  }
  return d;
}

enum class Kind { Dim, Edim, Mdim };

// Distance vectors of every element of the universe to the vertices in w,
// compared as whole vectors through std::set.
inline bool resolves(int n, const EdgeList& edges, const std::vector<std::vector<int>>& d, Kind kind,
                     const std::vector<int>& w) {
  std::set<std::vector<int>> seen;
  std::size_t count = 0;
  if (kind != Kind::Edim) {
    for (int x = 0; x < n; ++x) {
      std::vector<int> sig;
      for (const int v : w) sig.push_back(d[x][v]);
      seen.insert(sig);
      ++count;
    }
  }
  if (kind != Kind::Dim) {
    for (auto [a, b] : edges) {
      std::vector<int> sig;
      for (const int v : w) sig.push_back(std::min(d[a][v], d[b][v]));
      seen.insert(sig);
      ++count;
    }
  }
  return seen.size() == count;
}

// All k-subsets of 0..n-1 in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Smallest cardinality, lexicographically first witness.
inline std::vector<int> brute_basis(int n, const EdgeList& edges, Kind kind) {
  const auto d = bfs_all(adjacency(n, edges));
  for (int k = 1; k <= n; ++k) {
    for (const auto& w : subsets(n, k)) {
      if (resolves(n, edges, d, kind, w)) return w;
    }
  }
  return {};
}

inline int brute_dimension(int n, const EdgeList& edges, Kind kind) {
  return static_cast<int>(brute_basis(n, edges, kind).size());
}

// S(G) built by hand: subdivision vertex of edge j (in the given order) is n + j.
inline EdgeList subdivide(int n, const EdgeList& edges) {
  EdgeList out;
  for (std::size_t j = 0; j < edges.size(); ++j) {
    out.push_back({edges[j].first, n + static_cast<int>(j)});
    out.push_back({edges[j].second, n + static_cast<int>(j)});
  }
  return out;
}

}  // namespace oracle
