#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "pattern.hpp"
#include "rational.hpp"
#include "reduction.hpp"
#include "regularity.hpp"
#include "rng.hpp"

namespace hfreg {

enum class GeneratorKind {
  complete,
  empty,
  matching,
  half_graph,
  random_bipartite,
  random_kpartite,
};

GeneratorKind parse_generator_kind(const std::string& name);
std::string generator_kind_name(GeneratorKind kind);

struct GeneratorParams {
  GeneratorKind kind;
  std::vector<int> sizes;  // side/class sizes; matching/half_graph use sizes[0]
  Rational edge_probability = Rational(1, 2);
  uint64_t seed = 0;
};

/// Deterministic for a fixed seed.  half_graph on m+m has edges
/// {(i,j) : i <= j}.
KPartiteGraph generate(const GeneratorParams& params);

enum class Notion { bipartite, hf };

Notion parse_notion(const std::string& name);

struct SearchResult {
  int minimal_order = 0;
  VertexPartition partition = VertexPartition::trivial({0});
  uint64_t partitions_examined = 0;
  Notion notion = Notion::bipartite;
};

/// Exhaustive minimum-partition-order oracle: set partitions enumerated in
/// restricted-growth-string order (side-by-side for the bipartite notion,
/// which only admits side-pure partitions).  |V(G)| is capped by max_n.
SearchResult min_partition_order(const KPartiteGraph& g, Notion notion,
                                 const PatternPair* pp, const Eps& eps,
                                 int max_n = 12, const CheckBudget& budget = {});

/// twr(0)=1, twr(n)=2^twr(n-1).  Values above n=5 do not fit in memory and
/// are refused.
Int tower(int n);

struct SuiteReport {
  std::string name;
  int trials = 0;
  int passed = 0;
  std::vector<std::string> failures;  // one line per failing trial
  bool ok() const { return failures.empty() && passed == trials; }
};

/// Named property suites over seeded random instances.
/// Known names: lemma3 obs2 claim4 claim5 claim6 fact7 theorem2 sparse_obs.
SuiteReport verify_suite(const std::string& suite, int trials, uint64_t seed);

std::string suite_report_to_json(const SuiteReport& r);

struct ExperimentConfig {
  std::string pattern_text;  // pattern-pair file content
  GeneratorParams generator;
  std::vector<Rational> eps_schedule;
  CheckBudget budget;
  std::string output_prefix;  // writes <prefix>.json and <prefix>.csv
  bool randomized = false;    // generator draws random bits (seed required)
};

ExperimentConfig parse_experiment_config(const std::string& json_text);

struct ExperimentRow {
  Rational eps;
  std::string notion;
  int order = 0;
  Rational mass;
  bool vacuous = false;
  double runtime_seconds = 0.0;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  std::string json_report;
  std::string csv_report;
};

/// generate -> semi-blowup -> exhaustive min-order search -> reduce, for each
/// eps in the schedule; reports are byte-stable across reruns (timing columns
/// are zero unless with_timings).
ExperimentResult run_experiment(const ExperimentConfig& config,
                                bool with_timings = false);

/// Random (pattern pair, G0, extra sizes) instance used by several suites:
/// k in {2,3,4}, class sizes <= 4, random F ⊊ H with a valid e.
struct RandomInstance {
  PatternPair pp;
  BipartiteGraph g0;
  std::vector<int> extra_sizes;
};

RandomInstance random_instance(Rng& rng);

/// Isolated-vertex padding invariants (connected F required): padding changes
/// neither n_F nor n_H, and eps-(H,F)-regularity of the padded graph implies
/// it for the original.
struct SparsePaddingCheck {
  bool counts_equal = false;
  bool padded_regular = false;
  bool regularity_transfers = false;  // trivially true when padded irregular
};

SparsePaddingCheck check_sparse_padding(const PatternPair& pp,
                                        const KPartiteGraph& g,
                                        const std::vector<int>& extra,
                                        const Rational& eps,
                                        const CheckBudget& budget = {});

}  // namespace hfreg
