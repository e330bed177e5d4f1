#include <algorithm>
#include <limits>
#include <string>

#include "mdimlab/solvers.hpp"

namespace mdimlab {

namespace {

// r-combinations of {0..n-1} in lexicographic order.
class Combinations {
 public:
  Combinations(int n, int r) : n_(n), idx_(r) {
    for (int i = 0; i < r; ++i) idx_[i] = i;
  }

  std::span<const int> current() const noexcept { return idx_; }

  bool advance() noexcept {
    const int r = static_cast<int>(idx_.size());
    int i = r - 1;
    while (i >= 0 && idx_[i] == n_ - r + i) --i;
    if (i < 0) return false;
    ++idx_[i];
    for (int j = i + 1; j < r; ++j) idx_[j] = idx_[j - 1] + 1;
    return true;
  }

 private:
  int n_;
  std::vector<int> idx_;
};

struct Plan {
  std::vector<Vertex> forced;
  std::vector<Vertex> candidates;
  int first_k = 1;
};

Plan plan_search(const Graph& g, DimensionKind kind) {
  Plan p;
  if (kind == DimensionKind::Mdim) p.forced = forced_vertices_mdim(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!std::binary_search(p.forced.begin(), p.forced.end(), v)) p.candidates.push_back(v);
  }
  switch (kind) {
    case DimensionKind::Dim: p.first_k = twin_lower_bound(g); break;
    case DimensionKind::Edim: p.first_k = 1; break;
    case DimensionKind::Mdim: p.first_k = std::max<int>(1, static_cast<int>(p.forced.size())); break;
  }
  return p;
}

void fill_set(const Plan& p, std::span<const int> combo, std::vector<Vertex>& w) {
  w.assign(p.forced.begin(), p.forced.end());
  for (const int i : combo) w.push_back(p.candidates[i]);
}

Certificate make_certificate(DimensionKind kind, std::vector<Vertex> set, const Plan& p, std::uint64_t count) {
  std::sort(set.begin(), set.end());
  Certificate c;
  c.kind = kind;
  c.value = static_cast<int>(set.size());
  c.set = std::move(set);
  c.forced = p.forced;
  c.verifications = count;
  return c;
}

[[noreturn]] void budget_exceeded(std::uint64_t budget, int k) {
  throw Error(ErrorCode::SearchBudgetExceeded,
              "budget of " + std::to_string(budget) + " verifications exhausted at cardinality " + std::to_string(k));
}

[[noreturn]] void no_witness(DimensionKind kind) {
  throw Error(ErrorCode::NoWitness, "no vertex subset is a " + std::string(to_string(kind)) + " resolving set");
}

constexpr std::size_t kBatch = 1 << 13;

}  // namespace

Certificate solve_dimension_serial(const Graph& g, DimensionKind kind, std::uint64_t budget) {
  const Plan plan = plan_search(g, kind);
  const ResolvingTable table(g, kind);
  ResolvingTable::Scratch scratch(table);
  const int nf = static_cast<int>(plan.forced.size());
  const int nc = static_cast<int>(plan.candidates.size());
  std::uint64_t count = 0;
  std::vector<Vertex> w;

  for (int k = plan.first_k; k <= g.order(); ++k) {
    const int r = k - nf;
    if (r > nc) break;
    Combinations combo(nc, r);
    do {
      if (count == budget) budget_exceeded(budget, k);
      ++count;
      fill_set(plan, combo.current(), w);
      if (table.resolves(w, scratch)) return make_certificate(kind, std::move(w), plan, count);
    } while (combo.advance());
  }
  no_witness(kind);
}

// Combinations are cut into batches in lexicographic order; each batch is
// verified in parallel and the lowest verified position wins, so the result
// and the verification count match the serial search exactly.
Certificate solve_dimension(const Graph& g, DimensionKind kind, const SearchOptions& options) {
  if (!options.parallel) return solve_dimension_serial(g, kind, options.budget);

  const Plan plan = plan_search(g, kind);
  const ResolvingTable table(g, kind);
  const int nf = static_cast<int>(plan.forced.size());
  const int nc = static_cast<int>(plan.candidates.size());
  std::uint64_t count = 0;
  std::vector<int> flat;

  for (int k = plan.first_k; k <= g.order(); ++k) {
    const int r = k - nf;
    if (r > nc) break;
    Combinations combo(nc, r);
    bool more = true;
    while (more) {
      const std::uint64_t room = options.budget - count;
      if (room == 0) budget_exceeded(options.budget, k);
      const std::size_t cap = static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, room));
      flat.clear();
      std::size_t batch = 0;
      while (batch < cap && more) {
        const auto cur = combo.current();
        flat.insert(flat.end(), cur.begin(), cur.end());
        ++batch;
        more = combo.advance();
      }

      long long found = std::numeric_limits<long long>::max();
      const long long nb = static_cast<long long>(batch);
#pragma omp parallel if (nb >= 256)
      {
        ResolvingTable::Scratch scratch(table);
        std::vector<Vertex> w;
#pragma omp for schedule(static) reduction(min : found)
        for (long long b = 0; b < nb; ++b) {
          fill_set(plan, std::span<const int>(flat.data() + b * r, static_cast<std::size_t>(r)), w);
          if (b < found && table.resolves(w, scratch)) found = b;
        }
      }

      if (found != std::numeric_limits<long long>::max()) {
        count += static_cast<std::uint64_t>(found) + 1;
        std::vector<Vertex> w;
        fill_set(plan, std::span<const int>(flat.data() + found * r, static_cast<std::size_t>(r)), w);
        return make_certificate(kind, std::move(w), plan, count);
      }
      count += batch;
    }
  }
  no_witness(kind);
}

std::vector<Vertex> phi_of_basis(const DerivedGraph& sg, std::span<const Vertex> x) {
  if (sg.kind != DerivedKind::Subdivision) throw Error(ErrorCode::BadSpec, "phi is defined on subdivision graphs");
  if (x.empty() || !is_resolving(sg.graph, x)) throw Error(ErrorCode::NotABasis, "set does not resolve S(G)");
  std::vector<Vertex> out;
  for (const Vertex v : x) {
    const Provenance& p = sg.provenance[v];
    if (p.source == Provenance::Source::Original) {
      out.push_back(p.index);
    } else {
      // In S(G) a subdivision vertex is adjacent to exactly the two ends of its edge.
      const auto ends = sg.graph.neighbors(v);
      out.insert(out.end(), ends.begin(), ends.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PhiResult phi_of_graph(const Graph& g, const PhiOptions& options) {
  const DerivedGraph s = subdivision(g);
  const Certificate basis = solve_dimension(s.graph, DimensionKind::Dim, options.search);
  const int k = basis.value;
  const int n = s.graph.order();
  const std::uint64_t total = binomial(n, k);
  if (total > options.enumeration_cap) {
    throw Error(ErrorCode::EnumerationOverflow, "C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                                                    std::to_string(total) + " exceeds cap " +
                                                    std::to_string(options.enumeration_cap));
  }

  // Original endpoints of each vertex of S(G): itself, or the two ends of its edge.
  std::vector<std::pair<Vertex, Vertex>> image(n);
  for (Vertex v = 0; v < n; ++v) {
    if (s.is_subdivision_vertex(v)) {
      const Edge& e = g.edge(s.provenance[v].index);
      image[v] = {e.u, e.v};
    } else {
      image[v] = {v, v};
    }
  }

  const ResolvingTable table(s.graph, DimensionKind::Dim);
  PhiResult result;
  result.basis_size = k;
  result.phi_value = std::numeric_limits<int>::max();

  Combinations combo(n, k);
  std::vector<int> flat;
  std::vector<int> phi_size;
  bool more = true;
  while (more) {
    flat.clear();
    std::size_t batch = 0;
    while (batch < kBatch && more) {
      const auto cur = combo.current();
      flat.insert(flat.end(), cur.begin(), cur.end());
      ++batch;
      more = combo.advance();
    }
    phi_size.assign(batch, -1);
    const long long nb = static_cast<long long>(batch);
#pragma omp parallel if (options.search.parallel && nb >= 256)
    {
      ResolvingTable::Scratch scratch(table);
      std::vector<char> mark(g.order());
#pragma omp for schedule(static)
      for (long long b = 0; b < nb; ++b) {
        const std::span<const int> x(flat.data() + b * k, static_cast<std::size_t>(k));
        if (!table.resolves(x, scratch)) continue;
        std::fill(mark.begin(), mark.end(), 0);
        int size = 0;
        for (const Vertex v : x) {
          for (const Vertex u : {image[v].first, image[v].second}) {
            if (!mark[u]) {
              mark[u] = 1;
              ++size;
            }
          }
        }
        phi_size[b] = size;
      }
    }
    for (std::size_t b = 0; b < batch; ++b) {
      if (phi_size[b] < 0) continue;
      ++result.bases_enumerated;
      if (phi_size[b] < result.phi_value) {
        result.phi_value = phi_size[b];
        result.witness_basis.assign(flat.begin() + static_cast<long long>(b) * k,
                                    flat.begin() + static_cast<long long>(b + 1) * k);
      }
    }
  }
  result.witness_phi_set = phi_of_basis(s, result.witness_basis);
  return result;
}

}  // namespace mdimlab
