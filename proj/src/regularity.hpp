#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "counting.hpp"
#include "graph.hpp"
#include "pattern.hpp"
#include "rational.hpp"

namespace hfreg {

/// Resource and mode controls for the checkers.  Exact mode ignores the
/// sampling fields.  Sampled mode is one-sided: a found witness certifies
/// irregularity; absence of one certifies nothing.
struct CheckBudget {
  enum class Mode { exact, sampled };
  Mode mode = Mode::exact;
  /// Exact mode refuses inputs whose subset enumeration exceeds this.
  uint64_t max_enumerations = 1ULL << 24;
  uint64_t sample_count = 10'000;
  uint64_t seed = 0;
  int workers = 1;
  uint64_t transversal_budget = kDefaultTransversalBudget;
};

struct Witness {
  /// One vertex subset per side/class, graph-local ids, each sorted.
  std::vector<std::vector<int>> subsets;
  Rational reference;  // d(G) resp. coeff(G)
  Rational observed;   // d(G[S]) resp. coeff(G[U])
};

struct Verdict {
  enum class Kind {
    regular,
    irregular,
    undefined,         // the checked notion does not apply (n_F = 0, n_H = 0)
    no_witness_found,  // sampled mode, not a regularity certificate
  };
  Kind kind = Kind::regular;
  std::optional<Witness> witness;           // present iff kind == irregular
  std::optional<Rational> irregular_mass;   // partition-level checks
  uint64_t enumerated = 0;
  bool vacuous = false;  // eps >= 1: the notion cannot fail

  bool regular() const { return kind == Kind::regular; }
};

/// Szemerédi regularity of a bipartite graph: every induced subgraph on side
/// subsets with |S_i| >= eps|V_i| (exact rational comparison) has density
/// d(G) ± eps.  Exact mode returns the canonically first violating pair
/// (ascending (mask1, mask2) under the fixed vertex order), independent of
/// the worker count.
Verdict check_bipartite_regular(const BipartiteGraph& g0, const Eps& eps,
                                const CheckBudget& budget = {});

/// Definition-1 regularity: every induced k-partite subgraph G' with
/// n_F(G') >= eps·n_F(G) has coeff(G') = coeff(G) ± eps.  Undefined verdict
/// when n_F(G) = 0.
Verdict check_hf_regular(const KPartiteGraph& g, const PatternPair& pp,
                         const Eps& eps, const CheckBudget& budget = {});
Verdict check_hf_regular(const TupleView& view, const PatternPair& pp,
                         const Eps& eps, const CheckBudget& budget = {});

/// Partition-level Szemerédi regularity: sums |Y_1||Y_2| over unordered
/// cross-side cluster pairs whose bipartite subgraph is not eps-regular;
/// regular iff the sum <= eps·n² (n = total vertex count of g0).  Q must be
/// side-pure and partition V(g0).
Verdict check_regular_partition(const BipartiteGraph& g0,
                                const VertexPartition& q, const Eps& eps,
                                const CheckBudget& budget = {});

/// Definition-2 regularity: all but at most eps·n_H(G) transversal H-copies
/// lie in cluster-tuple views that are eps-(H,F)-regular (tuples with
/// undefined coefficient count as exceptional).
Verdict check_hf_regular_partition(const KPartiteGraph& g,
                                   const VertexPartition& p,
                                   const PatternPair& pp, const Eps& eps,
                                   const CheckBudget& budget = {});

/// Seeded random probe for a violating subset tuple.  Any reported witness is
/// re-checked exactly before being returned.  `pp` may be null for the
/// bipartite notion.
Verdict sampled_irregularity_probe(const KPartiteGraph& g,
                                   const PatternPair* pp, const Eps& eps,
                                   const CheckBudget& budget);

/// JSON serialization of a verdict: {notion, eps, regular, witness?, mass?,
/// enumerated, elapsed}.
std::string verdict_to_json(const Verdict& v, const std::string& notion,
                            const Eps& eps, double elapsed_seconds = 0.0,
                            bool with_timings = false);

}  // namespace hfreg
