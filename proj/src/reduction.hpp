#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "pattern.hpp"
#include "rational.hpp"
#include "regularity.hpp"
#include "semiblowup.hpp"

namespace hfreg {

/// Filtered restriction of a partition onto V: keeps clusters X with
/// |X ∩ V| >= delta|X| where delta = alpha|V|/|U|.  The kept intersections
/// cover at least (1-alpha)|V| vertices of V.
struct RestrictionResult {
  std::vector<std::vector<int>> kept_clusters;  // original clusters X
  Int coverage;                                 // sum over kept of |X ∩ V|
  Rational delta;
};

RestrictionResult restrict_partition(const VertexPartition& p,
                                     const std::vector<int>& v,
                                     const Rational& alpha);

/// Common refinement of P with {V_1, V_2}: Q_i = {X ∩ V_i : X ∈ P, nonempty}.
/// The result partitions V_1 ∪ V_2 and is side-pure with order <= 2|P|.
VertexPartition side_refinement(const VertexPartition& p,
                                const std::vector<int>& v1,
                                const std::vector<int>& v2);

/// Result of lifting a bipartite irregularity witness into the semi-blowup.
struct LiftedWitness {
  enum class Status { lifted, vacuous_regime };
  Status status;
  std::vector<std::vector<int>> tuple;  // (S_1, S_2, V_3, ..., V_k), global ids
  // Checked inequalities (meaningful when status == lifted):
  Int nf_witness;        // n_F of the lifted tuple
  Int nf_total;          // n_F of the whole semi-blowup
  Rational coeff_witness;
  Rational coeff_total;
  bool nf_threshold_met = false;   // n_F(witness) >= eps * n_F(G)
  bool coeff_deviates = false;     // |coeff(witness) - coeff(G)| > eps
};

/// Contrapositive of the regularity transfer: given a genuine bipartite
/// witness (S_1, S_2) for G0 at level eps' = sqrt(eps)·k^{2k}, produces the
/// tuple (S_1, S_2, V_3, ..., V_k) of H ⊙_e G0 (classes 3..k of the given
/// sizes) and verifies it violates eps-(H,F)-regularity.  S_1, S_2 are
/// side-local indices into G0.
LiftedWitness lift_irregularity_witness(const PatternPair& pp,
                                        const BipartiteGraph& g0,
                                        const std::vector<int>& extra_sizes,
                                        const std::vector<int>& s1,
                                        const std::vector<int>& s2,
                                        const Rational& eps,
                                        const CheckBudget& budget = {});

/// Slicing certificate: for Y_i ⊆ X_i with |Y_i| >= delta_i|X_i| and
/// G = T[Y_1..Y_k] a semi-blowup of H, transfers eps-regularity of T to
/// eps' = eps·k!/(delta_1···delta_k)-regularity of G.
struct SliceCertificate {
  Rational eps_prime;
  bool vacuous;             // eps' >= 1
  bool nf_bound_holds;      // n_F(G) >= (Delta/k!)·n_F(T)
  bool transfer_holds;      // every surviving S-tuple within 2·eps of coeff(G)
  uint64_t checked_tuples;
};

SliceCertificate slice_check(const KPartiteGraph& t, const PatternPair& pp,
                             const std::vector<std::vector<int>>& y,
                             const std::vector<Rational>& deltas,
                             const Rational& eps,
                             const CheckBudget& budget = {});

/// Full Theorem-2 pipeline report.
struct ReductionReport {
  int input_order = 0;
  int output_order = 0;
  Rational eps_in;
  Eps eps_out = Eps::exact(Rational(0));  // eps_in^(1/4) · k^{2k}
  bool vacuous = false;                   // eps_out >= 1
  Verdict input_verdict;                  // P against Definition 2 (if checked)
  bool input_checked = false;
  Verdict output_verdict;                 // Q against the Szemerédi notion
  VertexPartition output_partition = VertexPartition::trivial({0});
  // Per-stage diagnostics.
  std::vector<int> filtered_orders;       // |P_i| for i = 1..k
  Rational intermediate_mass;             // irregular |G0[Y1,Y2]| mass over P1*×P2*
  Rational intermediate_bound;            // eps·2^k·|G0|
  bool intermediate_bound_holds = false;
};

/// Builds the balanced semi-blowup H ⊙_e G0, optionally verifies that P is
/// eps-(H,F)-regular (Definition 2), and evaluates the common refinement
/// Q = side_refinement(P, V_1, V_2) against the eps^(1/4)·k^{2k} Szemerédi
/// partition notion on G0.  P partitions the semi-blowup's vertex set.
ReductionReport reduce_partition(const PatternPair& pp,
                                 const BipartiteGraph& g0,
                                 const VertexPartition& p, const Rational& eps,
                                 bool trusted = false,
                                 const CheckBudget& budget = {});

std::string reduction_report_to_json(const ReductionReport& r);

}  // namespace hfreg
