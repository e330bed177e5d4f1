#include "mdimlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "mdimlab/io.hpp"
#include "mdimlab/structural.hpp"
#include "mdimlab/transforms.hpp"

namespace mdimlab {

using json = nlohmann::json;

// ---- corpus ----------------------------------------------------------------

IntRange parse_range(std::string_view text) {
  auto number = [&](std::string_view s) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw Error(ErrorCode::BadSpec, "not an integer or range: '" + std::string(text) + "'");
    }
    return v;
  };
  const auto dash = text.find('-', 1);
  if (dash == std::string_view::npos) {
    const long long v = number(text);
    return {v, v};
  }
  IntRange r{number(text.substr(0, dash)), number(text.substr(dash + 1))};
  if (r.last < r.first) throw Error(ErrorCode::BadSpec, "empty range '" + std::string(text) + "'");
  return r;
}

void assign_ids(std::vector<Instance>& instances) {
  const int width = static_cast<int>(std::to_string(instances.size()).size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    std::string ord = std::to_string(i + 1);
    ord.insert(0, static_cast<std::size_t>(std::max(0, width - static_cast<int>(ord.size()))), '0');
    instances[i].id = ord + ":" + instances[i].source;
  }
}

namespace {

void append_family(std::vector<Instance>& out, const FamilySpec& spec) {
  out.push_back({"", spec.describe(), generate(spec).graph});
}

void append_all_trees(std::vector<Instance>& out, int n) {
  const auto trees = enumerate_small_trees(n);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    out.push_back({"", "trees(n=" + std::to_string(n) + ")#" + std::to_string(i + 1), trees[i]});
  }
}

}  // namespace

std::vector<Instance> build_corpus(const CorpusSpec& spec) {
  std::vector<Instance> out;
  for (long long n = spec.n.first; n <= spec.n.last; ++n) {
    if (spec.family == "trees") {
      append_all_trees(out, static_cast<int>(n));
      continue;
    }
    const auto family = parse_family(spec.family);
    if (!family) throw Error(ErrorCode::BadSpec, "unknown family '" + spec.family + "'");
    const bool seeded = *family == Family::RandomTree || *family == Family::RandomCactus;
    const IntRange seeds = seeded ? spec.seed : IntRange{0, 0};
    for (long long s = seeds.first; s <= seeds.last; ++s) {
      append_family(out, {*family, static_cast<int>(n), spec.cycles, static_cast<std::uint64_t>(s)});
    }
  }
  assign_ids(out);
  return out;
}

std::vector<Instance> default_corpus() {
  std::vector<Instance> out;
  for (int n = 2; n <= 8; ++n) append_all_trees(out, n);
  for (int s = 1; s <= 50; ++s) append_family(out, {Family::RandomTree, 3 + s % 8, 0, static_cast<std::uint64_t>(s)});
  for (int n = 3; n <= 7; ++n) append_family(out, {Family::Path, n});
  for (int k = 2; k <= 6; ++k) append_family(out, {Family::Star, k});
  for (int n = 3; n <= 8; ++n) append_family(out, {Family::Cycle, n});
  for (int s = 1; s <= 30; ++s) {
    const int n = 5 + s % 8;
    const int cycles = std::min(1 + s % 3, (n - 1) / 2);
    append_family(out, {Family::RandomCactus, n, cycles, static_cast<std::uint64_t>(s)});
  }
  for (int s = 101; s <= 120; ++s) {
    append_family(out, {Family::RandomTree, 3 + s % 7, 0, static_cast<std::uint64_t>(s)});
  }
  append_family(out, {Family::Path, 4});
  append_family(out, {Family::Cycle, 5});
  append_family(out, {Family::Cycle, 6});
  append_family(out, {Family::Star, 3});
  for (const int n : {2, 5, 6, 7}) append_family(out, {Family::Gn, n});
  assign_ids(out);
  return out;
}

// ---- theorem ids -----------------------------------------------------------

std::string_view to_string(Theorem t) noexcept {
  switch (t) {
    case Theorem::ForcedVertices: return "forced-vertices";
    case Theorem::CactusFormula: return "cactus-formula";
    case Theorem::SubdivisionMdimUpper: return "subdivision-mdim-upper";
    case Theorem::PhiLower: return "phi-lower";
    case Theorem::SubdivisionChain: return "subdivision-chain";
    case Theorem::GnGap: return "gn-gap";
    case Theorem::CactusSubdivisionEqual: return "cactus-subdivision-equal";
    case Theorem::MiddleDimUpper: return "middle-dim-upper";
    case Theorem::TreeMiddle: return "tree-middle";
    case Theorem::TreeTotalMdim: return "tree-total-mdim";
    case Theorem::TreeTotalDimBounds: return "tree-total-dim-bounds";
    case Theorem::DistanceIdentities: return "distance-identities";
  }
  return "?";
}

std::vector<Theorem> all_theorems() {
  return {Theorem::ForcedVertices,     Theorem::CactusFormula,   Theorem::SubdivisionMdimUpper,
          Theorem::PhiLower,           Theorem::SubdivisionChain, Theorem::GnGap,
          Theorem::CactusSubdivisionEqual, Theorem::MiddleDimUpper, Theorem::TreeMiddle,
          Theorem::TreeTotalMdim,      Theorem::TreeTotalDimBounds, Theorem::DistanceIdentities};
}

std::optional<Theorem> parse_theorem(std::string_view name) noexcept {
  for (const Theorem t : all_theorems()) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

std::vector<Theorem> parse_theorem_list(std::string_view text) {
  if (text.empty() || text == "all") return all_theorems();
  std::vector<Theorem> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto name = text.substr(start, end - start);
    const auto t = parse_theorem(name);
    if (!t) throw Error(ErrorCode::BadSpec, "unknown theorem id '" + std::string(name) + "'");
    if (std::find(out.begin(), out.end(), *t) == out.end()) out.push_back(*t);
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Violated: return "Violated";
    case Status::Skipped: return "Skipped";
  }
  return "?";
}

// ---- per-instance evaluation -------------------------------------------------

namespace {

// Lazily computed quantities shared by the checks of one instance.
class Context {
 public:
  Context(const Graph& g, const RunOptions& options) : g_(g), options_(options) {}

  const Graph& graph() const { return g_; }

  const Certificate& cert(DimensionKind kind) {
    auto& slot = certs_[static_cast<int>(kind)];
    if (!slot) slot = solve_dimension(g_, kind, options_.search);
    return *slot;
  }
  int dim() { return cert(DimensionKind::Dim).value; }
  int edim() { return cert(DimensionKind::Edim).value; }
  int mdim() { return cert(DimensionKind::Mdim).value; }

  const DerivedGraph& derived(DerivedKind kind) {
    auto& slot = derived_[static_cast<int>(kind)];
    if (!slot) slot = derive(g_, kind);
    return *slot;
  }
  int derived_value(DerivedKind dk, DimensionKind kind) {
    auto& slot = derived_values_[static_cast<int>(dk)][static_cast<int>(kind)];
    if (!slot) slot = solve_dimension(derived(dk).graph, kind, options_.search).value;
    return *slot;
  }
  int mdim_s() { return derived_value(DerivedKind::Subdivision, DimensionKind::Mdim); }

  const PhiResult& phi() {
    if (!phi_) phi_ = phi_of_graph(g_, {options_.phi_cap, options_.search});
    return *phi_;
  }

  const std::optional<CactusReport>& cactus() {
    if (!cactus_checked_) {
      cactus_checked_ = true;
      try {
        cactus_ = cactus_decompose(g_);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotCactus) throw;
      }
    }
    return cactus_;
  }

 private:
  const Graph& g_;
  const RunOptions& options_;
  std::optional<Certificate> certs_[3];
  std::optional<DerivedGraph> derived_[3];
  std::optional<int> derived_values_[3][3];
  std::optional<PhiResult> phi_;
  std::optional<CactusReport> cactus_;
  bool cactus_checked_ = false;
};

struct Outcome {
  Status status = Status::Holds;
  std::string reason;
  std::map<std::string, long long> values;

  Outcome& require(bool ok, std::string_view what) {
    if (!ok && status == Status::Holds) {
      status = Status::Violated;
      reason = std::string(what);
    }
    return *this;
  }
};

Outcome skipped(std::string reason) { return {Status::Skipped, std::move(reason), {}}; }

// Vertices of S(G) forming the explicit mixed resolving set of the two-hub
// family, in G's own labelling: hubs x < y, z_i in increasing vertex order.
std::optional<std::vector<Vertex>> gn_witness(const Graph& g, int n) {
  std::vector<Vertex> hubs, zs;
  for (Vertex v = 0; v < g.order(); ++v) (g.degree(v) == n + 1 ? hubs : zs).push_back(v);
  if (hubs.size() != 2 || static_cast<int>(zs.size()) != n) return std::nullopt;
  const int base = g.order();
  auto sub = [&](Vertex a, Vertex b) { return base + *g.edge_index(a, b); };
  std::vector<Vertex> s{sub(hubs[0], zs[0]), sub(hubs[0], zs[1]), sub(hubs[1], zs[2]), sub(hubs[1], zs[3])};
  for (int i = 4; i < n; ++i) s.push_back(zs[i]);
  std::sort(s.begin(), s.end());
  return s;
}

Outcome evaluate(Theorem theorem, Context& ctx) {
  const Graph& g = ctx.graph();
  Outcome o;
  auto& v = o.values;
  switch (theorem) {
    case Theorem::ForcedVertices: {
      const Certificate& c = ctx.cert(DimensionKind::Mdim);
      v["forced"] = static_cast<long long>(c.forced.size());
      v["mdim"] = c.value;
      const bool contained = std::includes(c.set.begin(), c.set.end(), c.forced.begin(), c.forced.end());
      o.require(contained, "forced vertex missing from certificate");
      for (const Vertex f : c.forced) {
        std::vector<Vertex> w;
        std::copy_if(c.set.begin(), c.set.end(), std::back_inserter(w), [&](Vertex x) { return x != f; });
        o.require(w.empty() || !is_mixed_resolving(g, w),
                  "certificate still mixed resolving without forced vertex " + std::to_string(f));
      }
      return o;
    }
    case Theorem::CactusFormula: {
      const auto& report = ctx.cactus();
      if (!report) return skipped("class: not a cactus");
      v["formula"] = report->mdim_formula;
      v["mdim"] = ctx.mdim();
      v["cycles"] = static_cast<long long>(report->cycles.size());
      v["epsilon"] = report->epsilon;
      return o.require(v["formula"] == v["mdim"], "formula != mdim");
    }
    case Theorem::SubdivisionMdimUpper:
      v["mdim"] = ctx.mdim();
      v["mdim_s"] = ctx.mdim_s();
      return o.require(v["mdim_s"] <= v["mdim"], "mdim(S(G)) > mdim(G)");
    case Theorem::PhiLower: {
      const PhiResult& phi = ctx.phi();
      v["phi"] = phi.phi_value;
      v["dim"] = ctx.dim();
      v["edim"] = ctx.edim();
      v["bases"] = static_cast<long long>(phi.bases_enumerated);
      return o.require(phi.phi_value >= std::max(v["dim"], v["edim"]), "phi < max{dim, edim}");
    }
    case Theorem::SubdivisionChain: {
      const PhiResult& phi = ctx.phi();
      v["dim"] = ctx.dim();
      v["edim"] = ctx.edim();
      v["phi"] = phi.phi_value;
      v["mdim_s"] = ctx.mdim_s();
      v["mdim"] = ctx.mdim();
      // Halves doubled: max{dim,edim} <= phi <= 2 mdim(S(G)), mdim(S(G)) <= mdim(G).
      o.require(std::max(v["dim"], v["edim"]) <= v["phi"], "max{dim, edim} > phi");
      o.require(v["phi"] <= 2 * v["mdim_s"], "phi > 2 mdim(S(G))");
      return o.require(v["mdim_s"] <= v["mdim"], "mdim(S(G)) > mdim(G)");
    }
    case Theorem::GnGap: {
      const auto n = recognize_gn(g);
      if (!n || *n < 5) return skipped("class: not G_n with n >= 5");
      const auto witness = gn_witness(g, *n);
      const Certificate& c = ctx.cert(DimensionKind::Mdim);
      v["n"] = *n;
      v["mdim"] = c.value;
      v["forced"] = static_cast<long long>(c.forced.size());
      v["witness_size"] = static_cast<long long>(witness->size());
      v["mdim_s"] = ctx.mdim_s();
      v["gap"] = v["mdim"] - v["mdim_s"];
      o.require(c.value == *n + 2, "mdim(G_n) != n + 2");
      o.require(v["forced"] == *n + 2, "not every vertex is forced");
      o.require(is_mixed_resolving(ctx.derived(DerivedKind::Subdivision).graph, *witness),
                "S_n is not mixed resolving in S(G_n)");
      return o.require(v["gap"] >= 2, "gap < 2");
    }
    case Theorem::CactusSubdivisionEqual: {
      if (!ctx.cactus()) return skipped("class: not a cactus");
      v["mdim"] = ctx.mdim();
      v["mdim_s"] = ctx.mdim_s();
      return o.require(v["mdim"] == v["mdim_s"], "mdim(S(G)) != mdim(G)");
    }
    case Theorem::MiddleDimUpper:
      v["dim_m"] = ctx.derived_value(DerivedKind::Middle, DimensionKind::Dim);
      v["mdim"] = ctx.mdim();
      return o.require(v["dim_m"] <= v["mdim"], "dim(M(G)) > mdim(G)");
    case Theorem::TreeMiddle:
      if (!is_tree(g)) return skipped("class: not a tree");
      v["n1"] = leaf_count(g);
      v["mdim"] = ctx.mdim();
      v["dim_m"] = ctx.derived_value(DerivedKind::Middle, DimensionKind::Dim);
      o.require(v["mdim"] == v["n1"], "mdim(T) != n1");
      return o.require(v["dim_m"] == v["n1"], "dim(M(T)) != n1");
    case Theorem::TreeTotalMdim:
      if (!is_tree(g)) return skipped("class: not a tree");
      v["n1"] = leaf_count(g);
      v["mdim_t"] = ctx.derived_value(DerivedKind::Total, DimensionKind::Mdim);
      return o.require(v["mdim_t"] == 2 * v["n1"], "mdim(T(T)) != 2 n1");
    case Theorem::TreeTotalDimBounds:
      if (!is_tree(g)) return skipped("class: not a tree");
      v["dim"] = ctx.dim();
      v["dim_t"] = ctx.derived_value(DerivedKind::Total, DimensionKind::Dim);
      v["n1"] = leaf_count(g);
      o.require(v["dim"] <= v["dim_t"], "dim(T) > dim(T(T))");
      return o.require(v["dim_t"] <= v["n1"], "dim(T(T)) > n1");
    case Theorem::DistanceIdentities: {
      const IdentityReport r = check_distance_identities(g);
      for (const auto& c : r.checks) {
        v[c.name] = c.checked;
        o.require(c.holds, c.name + " fails at " + c.counterexample);
      }
      return o;
    }
  }
  return o;
}

bool is_budget_error(ErrorCode c) {
  return c == ErrorCode::SearchBudgetExceeded || c == ErrorCode::EnumerationOverflow || c == ErrorCode::NoWitness;
}

}  // namespace

std::vector<TheoremCheck> check_instance(const Instance& inst, std::span<const Theorem> theorems,
                                         const RunOptions& options) {
  Context ctx(inst.graph, options);
  const std::string g6 = to_graph6(inst.graph);
  std::vector<TheoremCheck> out;
  for (const Theorem t : theorems) {
    TheoremCheck check;
    check.theorem = t;
    check.instance_id = inst.id;
    check.graph6 = g6;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = evaluate(t, ctx);
      check.status = o.status;
      check.reason = std::move(o.reason);
      check.values = std::move(o.values);
    } catch (const Error& e) {
      if (!is_budget_error(e.code())) throw;
      check.status = Status::Skipped;
      check.reason = std::string("budget: ") + e.what();
    }
    if (options.timing) {
      check.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    out.push_back(std::move(check));
  }
  return out;
}

// ---- exploration -------------------------------------------------------------

std::string_view to_string(ExploreTarget t) noexcept {
  return t == ExploreTarget::GapGreaterThanTwo ? "gap_gt_2" : "mdim_eq_mdimS";
}

std::optional<ExploreTarget> parse_explore_target(std::string_view name) noexcept {
  if (name == "gap_gt_2") return ExploreTarget::GapGreaterThanTwo;
  if (name == "mdim_eq_mdimS") return ExploreTarget::MdimEqualsSubdivision;
  return std::nullopt;
}

ExploreEntry explore_instance(const Instance& inst, const RunOptions& options) {
  ExploreEntry e;
  e.instance_id = inst.id;
  e.graph6 = to_graph6(inst.graph);
  const auto start = std::chrono::steady_clock::now();
  try {
    e.mdim = solve_dimension(inst.graph, DimensionKind::Mdim, options.search).value;
    e.mdim_subdivision = solve_dimension(subdivision(inst.graph).graph, DimensionKind::Mdim, options.search).value;
  } catch (const Error& err) {
    if (!is_budget_error(err.code())) throw;
    e.skipped = err.what();
  }
  if (options.timing) {
    e.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return e;
}

// ---- reports -----------------------------------------------------------------

int Report::count(Status s) const noexcept {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const TheoremCheck& c) { return c.status == s; }));
}

bool Report::any_budget_skip() const noexcept {
  const bool checks_skipped = std::any_of(checks.begin(), checks.end(), [](const TheoremCheck& c) {
    return c.status == Status::Skipped && c.reason.starts_with("budget");
  });
  const bool explore_skipped =
      std::any_of(explored.begin(), explored.end(), [](const ExploreEntry& e) { return !e.skipped.empty(); });
  return checks_skipped || explore_skipped;
}

namespace {

// Runs `work(i)` for every index, in parallel when asked; results land in
// their own slots so assembly order does not depend on scheduling.
template <typename T, typename Work>
std::vector<T> map_instances(std::size_t count, bool parallel, Work&& work) {
  std::vector<T> slots(count);
  const long long n = static_cast<long long>(count);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long long i = 0; i < n; ++i) {
    try {
      slots[static_cast<std::size_t>(i)] = work(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return slots;
}

}  // namespace

Report run_verify(const std::vector<Instance>& corpus, std::span<const Theorem> theorems, std::string input,
                  const RunOptions& options) {
  auto per_instance = map_instances<std::vector<TheoremCheck>>(
      corpus.size(), options.parallel_instances, [&](std::size_t i) { return check_instance(corpus[i], theorems, options); });
  Report r;
  r.mode = "verify";
  r.input = std::move(input);
  for (auto& checks : per_instance) {
    for (auto& c : checks) r.checks.push_back(std::move(c));
  }
  std::stable_sort(r.checks.begin(), r.checks.end(), [](const TheoremCheck& a, const TheoremCheck& b) {
    return std::tie(a.instance_id, a.theorem) < std::tie(b.instance_id, b.theorem);
  });
  return r;
}

Report run_explore(const std::vector<Instance>& corpus, ExploreTarget target, std::string input,
                   const RunOptions& options) {
  Report r;
  r.mode = "explore";
  r.input = std::move(input);
  r.target = target;
  r.explored = map_instances<ExploreEntry>(corpus.size(), options.parallel_instances,
                                           [&](std::size_t i) { return explore_instance(corpus[i], options); });
  std::stable_sort(r.explored.begin(), r.explored.end(),
                   [](const ExploreEntry& a, const ExploreEntry& b) { return a.instance_id < b.instance_id; });
  return r;
}

namespace {

json check_json(const TheoremCheck& c) {
  json j;
  j["theorem"] = to_string(c.theorem);
  j["instance"] = c.instance_id;
  j["graph6"] = c.graph6;
  j["status"] = to_string(c.status);
  if (!c.reason.empty()) j["reason"] = c.reason;
  j["values"] = c.values;
  if (c.millis) j["millis"] = *c.millis;
  if (c.status == Status::Violated) {
    // Full edge list so the instance can be reproduced without a graph6 decoder.
    const Graph g = from_graph6(c.graph6);
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    j["n"] = g.order();
  }
  return j;
}

json explore_json(const ExploreEntry& e) {
  json j;
  j["instance"] = e.instance_id;
  j["graph6"] = e.graph6;
  if (e.mdim) j["mdim"] = *e.mdim;
  if (e.mdim_subdivision) j["mdim_s"] = *e.mdim_subdivision;
  if (const auto gap = e.gap()) {
    j["gap"] = *gap;
    j["equal"] = *gap == 0;
  }
  if (!e.skipped.empty()) j["skipped"] = e.skipped;
  if (e.millis) j["millis"] = *e.millis;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_json(const Report& report) {
  json j;
  j["tool"] = "mdimlab";
  j["version"] = kToolVersion;
  j["mode"] = report.mode;
  j["input"] = report.input;
  if (report.mode == "verify") {
    json records = json::array();
    for (const auto& c : report.checks) records.push_back(check_json(c));
    j["records"] = std::move(records);
    j["summary"] = {{"holds", report.count(Status::Holds)},
                    {"violated", report.count(Status::Violated)},
                    {"skipped", report.count(Status::Skipped)}};
  } else {
    json records = json::array();
    std::map<std::string, long long> by_gap;
    json hits = json::array();
    int equal = 0, unequal = 0, skipped_count = 0;
    for (const auto& e : report.explored) {
      records.push_back(explore_json(e));
      const auto gap = e.gap();
      if (!gap) {
        ++skipped_count;
        continue;
      }
      ++by_gap[std::to_string(*gap)];
      (*gap == 0 ? equal : unequal) += 1;
      const bool hit = report.target == ExploreTarget::GapGreaterThanTwo ? *gap > 2 : *gap == 0;
      if (hit) hits.push_back(e.instance_id);
    }
    j["records"] = std::move(records);
    j["target"] = to_string(*report.target);
    json summary;
    summary["scanned"] = report.explored.size();
    summary["skipped"] = skipped_count;
    summary["by_gap"] = by_gap;
    summary["equal"] = equal;
    summary["unequal"] = unequal;
    summary["matches"] = hits;
    if (report.target == ExploreTarget::GapGreaterThanTwo) {
      summary["finding"] = hits.empty() ? "none found in scanned corpus" : "instances with gap > 2 found";
    } else {
      summary["finding"] = "equality status per scanned instance; no characterization implied";
    }
    j["summary"] = std::move(summary);
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const Report& report) {
  std::ostringstream os;
  if (report.mode == "verify") {
    os << "instance,theorem,status,reason,values,graph6\n";
    for (const auto& c : report.checks) {
      std::string values;
      for (const auto& [k, val] : c.values) values += (values.empty() ? "" : ";") + k + "=" + std::to_string(val);
      os << csv_field(c.instance_id) << ',' << to_string(c.theorem) << ',' << to_string(c.status) << ','
         << csv_field(c.reason) << ',' << csv_field(values) << ',' << csv_field(c.graph6) << '\n';
    }
  } else {
    os << "instance,mdim,mdim_s,gap,skipped,graph6\n";
    for (const auto& e : report.explored) {
      const auto gap = e.gap();
      os << csv_field(e.instance_id) << ',' << (e.mdim ? std::to_string(*e.mdim) : "") << ','
         << (e.mdim_subdivision ? std::to_string(*e.mdim_subdivision) : "") << ','
         << (gap ? std::to_string(*gap) : "") << ',' << csv_field(e.skipped) << ',' << csv_field(e.graph6) << '\n';
    }
  }
  return os.str();
}

std::string certificate_json(const Certificate& c, std::string_view input, std::string_view derived, bool verified,
                             std::optional<double> millis) {
  json j;
  j["tool"] = "mdimlab";
  j["version"] = kToolVersion;
  j["mode"] = "solve";
  j["input"] = input;
  j["derived"] = derived;
  j["kind"] = to_string(c.kind);
  j["value"] = c.value;
  j["set"] = c.set;
  j["forced"] = c.forced;
  j["verifications"] = c.verifications;
  j["verified"] = verified;
  if (millis) j["millis"] = *millis;
  return j.dump(2) + "\n";
}

}  // namespace mdimlab
