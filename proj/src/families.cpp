#include "mdimlab/families.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <set>

namespace mdimlab {

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
    case Family::Complete: return "complete";
    case Family::Gn: return "gn";
    case Family::RandomTree: return "random-tree";
    case Family::RandomCactus: return "random-cactus";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (const Family f : {Family::Path, Family::Cycle, Family::Star, Family::Complete, Family::Gn,
                         Family::RandomTree, Family::RandomCactus}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string FamilySpec::describe() const {
  std::string s = std::string(to_string(family)) + "(n=" + std::to_string(n);
  if (family == Family::RandomCactus) s += ",cycles=" + std::to_string(cycles);
  if (family == Family::RandomTree || family == Family::RandomCactus) s += ",seed=" + std::to_string(seed);
  return s + ")";
}

std::uint64_t PortableRng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Largest multiple of bound representable; reject draws above it.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Graph tree_from_pruefer(int n, const std::vector<int>& sequence) {
  if (n < 2 || static_cast<int>(sequence.size()) != n - 2) throw Error(ErrorCode::BadSpec, "bad Pruefer sequence length");
  std::vector<int> degree(n, 1);
  for (const int s : sequence) {
    if (s < 0 || s >= n) throw Error(ErrorCode::BadSpec, "Pruefer entry out of range");
    ++degree[s];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (const int s : sequence) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, s});
    if (--degree[s] == 1) leaves.push(s);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Graph::build(n, std::move(edges));
}

namespace {

Generated random_cactus(int n, int cycles, std::uint64_t seed) {
  if (cycles < 0 || n < 2 || n - 1 < 2 * cycles) {
    throw Error(ErrorCode::BadSpec, "random-cactus needs n - 1 >= 2 * cycles");
  }
  PortableRng rng(seed);
  std::vector<int> lengths(cycles, 3);
  int bridges = 0;
  for (int extra = n - 1 - 2 * cycles; extra > 0; --extra) {
    const auto pick = rng.below(static_cast<std::uint64_t>(cycles) + 1);
    if (pick < static_cast<std::uint64_t>(cycles)) {
      ++lengths[pick];
    } else {
      ++bridges;
    }
  }
  // Blocks: cycle lengths >= 3, bridges encoded as 2.
  std::vector<int> blocks = lengths;
  blocks.insert(blocks.end(), bridges, 2);
  for (std::size_t i = blocks.size(); i > 1; --i) std::swap(blocks[i - 1], blocks[rng.below(i)]);

  // Each block hangs off one existing vertex and brings only new vertices,
  // so cycles stay edge-disjoint.
  std::vector<Edge> edges;
  int count = 1;
  for (const int len : blocks) {
    const Vertex at = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(count)));
    Vertex prev = at;
    for (int i = 1; i < len; ++i) {
      edges.push_back({prev, count});
      prev = count++;
    }
    if (len >= 3) edges.push_back({prev, at});
  }
  return {Graph::build(n, std::move(edges)), {}};
}

}  // namespace

Generated generate(const FamilySpec& spec) {
  const int n = spec.n;
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::Path:
      if (n < 2) throw Error(ErrorCode::BadSpec, "path needs n >= 2");
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      return {Graph::build(n, std::move(edges)), {}};
    case Family::Cycle:
      if (n < 3) throw Error(ErrorCode::BadSpec, "cycle needs n >= 3");
      for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
      return {Graph::build(n, std::move(edges)), {}};
    case Family::Star:
      if (n < 1) throw Error(ErrorCode::BadSpec, "star needs k >= 1");
      for (int i = 1; i <= n; ++i) edges.push_back({0, i});
      return {Graph::build(n + 1, std::move(edges)), {}};
    case Family::Complete:
      if (n < 2) throw Error(ErrorCode::BadSpec, "complete graph needs n >= 2");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
      return {Graph::build(n, std::move(edges)), {}};
    case Family::Gn: {
      if (n < 2) throw Error(ErrorCode::BadSpec, "G_n needs n >= 2");
      std::map<std::string, Vertex> names{{"x", 0}, {"y", 1}};
      edges.push_back({0, 1});
      for (int i = 1; i <= n; ++i) {
        edges.push_back({0, 1 + i});
        edges.push_back({1, 1 + i});
        names["z" + std::to_string(i)] = 1 + i;
      }
      return {Graph::build(n + 2, std::move(edges)), std::move(names)};
    }
    case Family::RandomTree: {
      if (n < 2) throw Error(ErrorCode::BadSpec, "random-tree needs n >= 2");
      PortableRng rng(spec.seed);
      std::vector<int> seq(n - 2);
      for (int& s : seq) s = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      return {tree_from_pruefer(n, seq), {}};
    }
    case Family::RandomCactus:
      return random_cactus(n, spec.cycles, spec.seed);
  }
  throw Error(ErrorCode::BadSpec, "unknown family");
}

namespace {

std::vector<Vertex> tree_centres(const Graph& t) {
  const int n = t.order();
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (const Vertex v : layer) {
      for (const Vertex w : t.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string encode_rooted(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (const Vertex w : t.neighbors(v)) {
    if (w != parent) kids.push_back(encode_rooted(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

Graph decode_rooted(const std::string& code) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  int next = 0;
  for (const char c : code) {
    if (c == '(') {
      if (!stack.empty()) edges.push_back({stack.back(), next});
      stack.push_back(next++);
    } else {
      stack.pop_back();
    }
  }
  return Graph::build(next, std::move(edges));
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
  if (tree.size() != tree.order() - 1) throw Error(ErrorCode::ClassMismatch, "canonical form needs a tree");
  std::string best;
  for (const Vertex c : tree_centres(tree)) {
    std::string s = encode_rooted(tree, c, -1);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

std::vector<Graph> enumerate_small_trees(int n) {
  if (n < 2 || n > 10) throw Error(ErrorCode::BadSpec, "tree enumeration supports 2 <= n <= 10");
  std::set<std::string> level{tree_canonical_form(Graph::build(2, {{0, 1}}))};
  for (int size = 3; size <= n; ++size) {
    std::set<std::string> grown;
    for (const std::string& code : level) {
      const Graph t = decode_rooted(code);
      std::vector<Edge> base(t.edges().begin(), t.edges().end());
      for (Vertex v = 0; v < t.order(); ++v) {
        auto edges = base;
        edges.push_back({v, t.order()});
        grown.insert(tree_canonical_form(Graph::build(t.order() + 1, std::move(edges))));
      }
    }
    level = std::move(grown);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const std::string& code : level) out.push_back(decode_rooted(code));
  return out;
}

}  // namespace mdimlab
