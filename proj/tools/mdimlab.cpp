// mdimlab: command-line front end for the metric-dimension laboratory.
//
//   mdimlab transform --family gn --n 5 --derived s --format dot
//   mdimlab solve --input g.txt --kind mdim --derived t
//   mdimlab verify --family trees --n 2-8 --theorems tree-middle,tree-total-mdim
//   mdimlab explore --family random-cactus --n 10 --cycles 2 --seed 1-20 --target gap_gt_2
//   mdimlab generate --family random-tree --n 9 --seed 4 --format graph6

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mdimlab/harness.hpp"
#include "mdimlab/io.hpp"
#include "mdimlab/structural.hpp"
#include "mdimlab/transforms.hpp"

namespace {

using namespace mdimlab;
using json = nlohmann::json;

struct InputFlags {
  std::vector<std::string> files;
  std::string family;
  std::string n = "2";
  int cycles = 0;
  std::string seed = "0";

  void attach(CLI::App* app) {
    app->add_option("--input", files, "Graph file (edge list or graph6, one graph per line)");
    app->add_option("--family", family,
                    "path|cycle|star|complete|gn|random-tree|random-cactus, or trees (all non-isomorphic trees)");
    app->add_option("--n", n, "Size parameter, N or A-B");
    app->add_option("--cycles", cycles, "Cycle count for random-cactus");
    app->add_option("--seed", seed, "Seed for random families, S or A-B");
  }

  bool has_source() const { return !files.empty() || !family.empty(); }

  std::vector<Instance> corpus() const {
    std::vector<Instance> out;
    if (!files.empty()) {
      for (const auto& path : files) {
        const auto graphs = parse_graphs(read_file(path));
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          out.push_back({"", graphs.size() == 1 ? path : path + "#" + std::to_string(i + 1), graphs[i]});
        }
      }
      assign_ids(out);
      return out;
    }
    return build_corpus({family, parse_range(n), cycles, parse_range(seed)});
  }

  std::string describe() const {
    if (!files.empty()) {
      std::string s;
      for (const auto& f : files) s += (s.empty() ? "" : ",") + f;
      return s;
    }
    std::string s = family + " n=" + n;
    if (family == "random-cactus") s += " cycles=" + std::to_string(cycles);
    if (family == "random-tree" || family == "random-cactus") s += " seed=" + seed;
    return s;
  }

  Instance single() const {
    auto all = corpus();
    if (all.size() != 1) throw Error(ErrorCode::BadSpec, "expected exactly one input graph, got " + std::to_string(all.size()));
    return std::move(all.front());
  }

  static std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::optional<DerivedKind> derived_kind(const std::string& which) {
  if (which == "s") return DerivedKind::Subdivision;
  if (which == "m") return DerivedKind::Middle;
  if (which == "t") return DerivedKind::Total;
  return std::nullopt;
}

DimensionKind dimension_kind(const std::string& kind) {
  if (kind == "dim") return DimensionKind::Dim;
  if (kind == "edim") return DimensionKind::Edim;
  return DimensionKind::Mdim;
}

std::string transform_json(const Graph& base, const std::string& which) {
  json j;
  j["tool"] = "mdimlab";
  j["version"] = kToolVersion;
  j["mode"] = "transform";
  j["derived"] = which;
  j["base"] = {{"n", base.order()}, {"m", base.size()}};
  json vertices = json::array();
  json edges = json::array();
  if (which == "l") {
    const Graph lg = line_graph(base);
    for (Vertex v = 0; v < lg.order(); ++v) {
      vertices.push_back({{"id", v}, {"source", "edge"}, {"index", v}});
    }
    for (const Edge& e : lg.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"class", "L"}});
    j["n"] = lg.order();
    j["m"] = lg.size();
  } else {
    const DerivedGraph dg = derive(base, *derived_kind(which));
    for (Vertex v = 0; v < dg.graph.order(); ++v) {
      const Provenance& p = dg.provenance[v];
      vertices.push_back({{"id", v},
                          {"source", p.source == Provenance::Source::Original ? "vertex" : "edge"},
                          {"index", p.index}});
    }
    for (EdgeId k = 0; k < dg.graph.size(); ++k) {
      const Edge& e = dg.graph.edge(k);
      edges.push_back({{"u", e.u}, {"v", e.v}, {"class", to_string(dg.edge_class[k])}});
    }
    j["n"] = dg.graph.order();
    j["m"] = dg.graph.size();
  }
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

int run_transform(const InputFlags& in, const std::string& which, const std::string& format, const std::string& out) {
  const Graph base = in.single().graph;
  if (format == "json") {
    write_output(transform_json(base, which), out);
  } else if (which == "l") {
    const Graph lg = line_graph(base);
    write_output(format == "dot" ? to_dot(lg, "line") : format == "graph6" ? to_graph6(lg) + "\n" : to_edge_list(lg), out);
  } else {
    const DerivedGraph dg = derive(base, *derived_kind(which));
    write_output(format == "dot" ? to_dot(dg) : format == "graph6" ? to_graph6(dg.graph) + "\n" : to_edge_list(dg.graph),
                 out);
  }
  return 0;
}

int run_solve(const InputFlags& in, const std::string& kind, const std::string& which, const SearchOptions& search,
              bool timing, const std::string& out) {
  const Instance inst = in.single();
  Graph target = inst.graph;
  if (which == "l") {
    target = line_graph(inst.graph);
  } else if (const auto dk = derived_kind(which)) {
    target = derive(inst.graph, *dk).graph;
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    const Certificate c = solve_dimension(target, dimension_kind(kind), search);
    std::optional<double> millis;
    if (timing) millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    write_output(certificate_json(c, in.describe(), which, verifies(target, c.kind, c.set), millis), out);
    return 0;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SearchBudgetExceeded && e.code() != ErrorCode::NoWitness) throw;
    json j{{"tool", "mdimlab"}, {"version", kToolVersion}, {"mode", "solve"}, {"input", in.describe()},
           {"derived", which}, {"kind", kind}, {"error", to_string(e.code())}, {"message", e.what()}};
    write_output(j.dump(2) + "\n", out);
    return 3;
  }
}

int finish_report(const Report& r, const std::string& format, bool strict, const std::string& out) {
  write_output(format == "csv" ? to_csv(r) : to_json(r), out);
  if (r.any_violated()) return 1;
  if (strict && r.any_budget_skip()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact metric, edge metric and mixed metric dimension laboratory"};
  app.require_subcommand(1);

  InputFlags input;
  std::string kind = "mdim", derived = "none", theorems = "all", format, target = "gap_gt_2", output;
  std::uint64_t budget = SearchOptions{}.budget;
  std::uint64_t phi_cap = RunOptions{}.phi_cap;
  bool strict = false, timing = false, serial = false;

  auto* transform = app.add_subcommand("transform", "Build S, M, T or L of a graph");
  auto* solve = app.add_subcommand("solve", "Compute dim, edim or mdim exactly");
  auto* verify = app.add_subcommand("verify", "Check the theorem set on a corpus");
  auto* explore = app.add_subcommand("explore", "Scan a corpus for mdim(G) - mdim(S(G))");
  auto* gen = app.add_subcommand("generate", "Emit generated graphs");

  for (auto* sub : {transform, solve, verify, explore, gen}) {
    input.attach(sub);
    sub->add_option("--output,-o", output, "Write to file instead of stdout");
  }
  transform->add_option("--derived", derived, "s|m|t|l")->required()->check(CLI::IsMember({"s", "m", "t", "l"}));
  transform->add_option("--format", format, "json|dot|edgelist|graph6")
      ->check(CLI::IsMember({"json", "dot", "edgelist", "graph6"}));

  solve->add_option("--kind", kind, "dim|edim|mdim")->check(CLI::IsMember({"dim", "edim", "mdim"}));
  solve->add_option("--derived", derived, "none|s|m|t|l")->check(CLI::IsMember({"none", "s", "m", "t", "l"}));
  solve->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

  for (auto* sub : {solve, verify, explore}) {
    sub->add_option("--budget", budget, "Subset verifications allowed per solver call");
    sub->add_flag("--timing", timing, "Include wall-clock milliseconds (reports are then not byte-stable)");
    sub->add_flag("--serial", serial, "Disable OpenMP parallelism");
  }
  for (auto* sub : {verify, explore}) {
    sub->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--phi-cap", phi_cap, "Largest number of candidate bases enumerated for phi");
    sub->add_flag("--strict", strict, "Nonzero exit when any check was skipped for budget");
  }
  verify->add_option("--theorems", theorems, "Comma-separated check ids, or all");
  explore->add_option("--target", target, "gap_gt_2|mdim_eq_mdimS")->check(CLI::IsMember({"gap_gt_2", "mdim_eq_mdimS"}));
  gen->add_option("--format", format, "edgelist|graph6|json|dot")
      ->check(CLI::IsMember({"edgelist", "graph6", "json", "dot"}));

  CLI11_PARSE(app, argc, argv);

  RunOptions run;
  run.search.budget = budget;
  run.search.parallel = !serial;
  run.parallel_instances = !serial;
  run.phi_cap = phi_cap;
  run.timing = timing;

  try {
    if (*transform) {
      if (!input.has_source()) throw Error(ErrorCode::BadSpec, "transform needs --input or --family");
      return run_transform(input, derived, format.empty() ? "json" : format, output);
    }
    if (*solve) {
      if (!input.has_source()) throw Error(ErrorCode::BadSpec, "solve needs --input or --family");
      return run_solve(input, kind, derived, run.search, timing, output);
    }
    if (*verify) {
      const auto corpus = input.has_source() ? input.corpus() : default_corpus();
      const auto ids = parse_theorem_list(theorems);
      const Report r = run_verify(corpus, ids, input.has_source() ? input.describe() : "default", run);
      return finish_report(r, format, strict, output);
    }
    if (*explore) {
      const auto corpus = input.has_source() ? input.corpus() : default_corpus();
      const Report r = run_explore(corpus, *parse_explore_target(target),
                                   input.has_source() ? input.describe() : "default", run);
      return finish_report(r, format, strict, output);
    }
    if (*gen) {
      if (input.family.empty()) throw Error(ErrorCode::BadSpec, "generate needs --family");
      const auto corpus = input.corpus();
      const std::string fmt = format.empty() ? "edgelist" : format;
      std::string text;
      if (fmt == "json") {
        json arr = json::array();
        for (const auto& inst : corpus) {
          json edges = json::array();
          for (const Edge& e : inst.graph.edges()) edges.push_back({e.u, e.v});
          arr.push_back({{"id", inst.id}, {"n", inst.graph.order()}, {"edges", edges}, {"graph6", to_graph6(inst.graph)}});
        }
        text = arr.dump(2) + "\n";
      } else {
        for (const auto& inst : corpus) {
          if (fmt == "graph6") {
            text += to_graph6(inst.graph) + "\n";
          } else if (fmt == "dot") {
            text += to_dot(inst.graph);
          } else {
            text += to_edge_list(inst.graph);
          }
        }
      }
      write_output(text, output);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "mdimlab: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
