#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdimlab/families.hpp"
#include "mdimlab/graph.hpp"
#include "mdimlab/solvers.hpp"

namespace mdimlab {

inline constexpr std::string_view kToolVersion = "0.3.0";

struct Instance {
  std::string id;      // unique; reports are sorted by it
  std::string source;  // family spec or file name
  Graph graph;
};

// ---- corpus ----------------------------------------------------------------

struct IntRange {
  long long first = 0;
  long long last = 0;
};

/// "7" or "3-9". Throws Error{BadSpec}.
IntRange parse_range(std::string_view text);

struct CorpusSpec {
  std::string family;  // a Family name, or "trees" for every non-isomorphic tree
  IntRange n{2, 2};
  int cycles = 0;
  IntRange seed{0, 0};
};

std::vector<Instance> build_corpus(const CorpusSpec& spec);

/// Every instance the checked claims are exercised on: exhaustive trees up
/// to 8 vertices, 50 random trees, paths, stars, cycles, 30 random cacti,
/// the small named graphs and G_2, G_5..G_7.
std::vector<Instance> default_corpus();

/// Ids are "<ordinal>:<description>" with a zero-padded ordinal so that
/// lexicographic order equals insertion order.
void assign_ids(std::vector<Instance>& instances);

// ---- theorem checks --------------------------------------------------------

enum class Theorem {
  ForcedVertices,          // maximal-neighbour vertices lie in every mixed resolving set
  CactusFormula,           // mdim of a cactus from leaves, root counts and geodesic triples
  SubdivisionMdimUpper,    // mdim(S(G)) <= mdim(G)
  PhiLower,                // phi(G) >= max{dim(G), edim(G)}
  SubdivisionChain,        // max{dim,edim} <= phi <= 2 mdim(S(G)), mdim(S(G)) <= mdim(G)
  GnGap,                   // mdim(G_n) = n+2, S_n resolves S(G_n), gap >= 2 (n >= 5)
  CactusSubdivisionEqual,  // mdim(S(G)) = mdim(G) for cacti
  MiddleDimUpper,          // dim(M(G)) <= mdim(G)
  TreeMiddle,              // mdim(T) = dim(M(T)) = n1(T)
  TreeTotalMdim,           // mdim(T(T)) = 2 n1(T)
  TreeTotalDimBounds,      // dim(T) <= dim(T(T)) <= n1(T)
  DistanceIdentities,      // S(G) and M(G) distance identities
};

std::string_view to_string(Theorem t) noexcept;
std::optional<Theorem> parse_theorem(std::string_view name) noexcept;
std::vector<Theorem> all_theorems();
/// Comma-separated ids or "all". Throws Error{BadSpec}.
std::vector<Theorem> parse_theorem_list(std::string_view text);

enum class Status { Holds, Violated, Skipped };
std::string_view to_string(Status s) noexcept;

struct TheoremCheck {
  Theorem theorem = Theorem::ForcedVertices;
  std::string instance_id;
  std::string graph6;
  Status status = Status::Holds;
  std::string reason;                       // Skipped / Violated detail
  std::map<std::string, long long> values;  // both sides of the claim
  std::optional<double> millis;
};

struct RunOptions {
  SearchOptions search;
  std::uint64_t phi_cap = 10'000'000;
  bool timing = false;
  bool parallel_instances = true;
};

std::vector<TheoremCheck> check_instance(const Instance& inst, std::span<const Theorem> theorems,
                                         const RunOptions& options = {});

// ---- exploration -----------------------------------------------------------

enum class ExploreTarget { GapGreaterThanTwo, MdimEqualsSubdivision };
std::string_view to_string(ExploreTarget t) noexcept;
std::optional<ExploreTarget> parse_explore_target(std::string_view name) noexcept;

struct ExploreEntry {
  std::string instance_id;
  std::string graph6;
  std::optional<int> mdim;
  std::optional<int> mdim_subdivision;
  std::string skipped;  // non-empty when a solver gave up
  std::optional<double> millis;

  std::optional<int> gap() const {
    if (!mdim || !mdim_subdivision) return std::nullopt;
    return *mdim - *mdim_subdivision;
  }
};

ExploreEntry explore_instance(const Instance& inst, const RunOptions& options = {});

// ---- reports ---------------------------------------------------------------

struct Report {
  std::string mode;   // "verify", "explore", "solve"
  std::string input;  // corpus description or file list
  std::vector<TheoremCheck> checks;
  std::vector<ExploreEntry> explored;
  std::optional<ExploreTarget> target;

  int count(Status s) const noexcept;
  bool any_violated() const noexcept { return count(Status::Violated) > 0; }
  bool any_budget_skip() const noexcept;
};

/// Checks every instance against every theorem; instances run in parallel,
/// records come back sorted by (instance id, theorem).
Report run_verify(const std::vector<Instance>& corpus, std::span<const Theorem> theorems, std::string input,
                  const RunOptions& options = {});
Report run_explore(const std::vector<Instance>& corpus, ExploreTarget target, std::string input,
                   const RunOptions& options = {});

/// Stable key order, two-space indent, trailing newline.
std::string to_json(const Report& report);
/// Header plus one row per check (verify) or per instance (explore).
std::string to_csv(const Report& report);

std::string certificate_json(const Certificate& c, std::string_view input, std::string_view derived, bool verified,
                             std::optional<double> millis);

}  // namespace mdimlab
