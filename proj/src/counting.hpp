#pragma once

#include <cstdint>

#include "graph.hpp"
#include "pattern.hpp"
#include "rational.hpp"

namespace hfreg {

/// Copy-count conventions.  The canonical convention throughout the project
/// is `unlabeled`: subgraphs isomorphic to the pattern with one vertex per
/// slot.  `labeled` counts injective edge-preserving maps and always equals
/// unlabeled * |Aut(pattern)|.
enum class CountConvention { unlabeled, labeled };

struct CopyCount {
  Int value;
  CountConvention convention;
};

/// Upper bound on transversal tuples enumerated per count (product of slot
/// sizes); counts above this are refused.
inline constexpr uint64_t kDefaultTransversalBudget = 1'000'000'000ULL;

/// |Aut(P)| by exhaustive permutation check.
Int automorphism_count(const Pattern& p);

/// Labeled transversal embeddings of `p` into the view: injective maps
/// assigning each pattern vertex to a distinct slot, edges to edges.
Int count_labeled(const Pattern& p, const TupleView& view,
                  uint64_t budget = kDefaultTransversalBudget);

/// Canonical (unlabeled) transversal copy count; splitting the outermost
/// slot across `workers` threads yields a bit-identical result.
CopyCount count_copies(const Pattern& p, const TupleView& view,
                       uint64_t budget = kDefaultTransversalBudget,
                       int workers = 1);
CopyCount count_copies(const Pattern& p, const KPartiteGraph& g,
                       uint64_t budget = kDefaultTransversalBudget,
                       int workers = 1);

/// Edge density of a bipartite graph, exact.
Rational density(const BipartiteGraph& g0);

struct Coefficient {
  Rational value;
  Int h_count;  // numerator count (copies of H)
  Int f_count;  // denominator count (copies of F), > 0
};

/// n_H / n_F in the unlabeled convention; throws zero_denominator_error when
/// n_F = 0 (the coefficient is undefined, callers must not substitute).
Coefficient hf_coefficient(const PatternPair& pp, const TupleView& view,
                           uint64_t budget = kDefaultTransversalBudget);
Coefficient hf_coefficient(const PatternPair& pp, const KPartiteGraph& g,
                           uint64_t budget = kDefaultTransversalBudget);

}  // namespace hfreg
