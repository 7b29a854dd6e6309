#include "reduction.hpp"

#include <json.hpp>

#include <algorithm>

namespace hfreg {

namespace {

std::vector<int> sorted_intersection(const std::vector<int>& cluster,
                                     const std::vector<int>& v) {
  std::vector<int> out;
  std::set_intersection(cluster.begin(), cluster.end(), v.begin(), v.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

RestrictionResult restrict_partition(const VertexPartition& p,
                                     const std::vector<int>& v,
                                     const Rational& alpha) {
  if (v.empty()) throw invalid_argument_error("restriction subset is empty");
  if (alpha <= 0 || alpha > 1)
    throw invalid_argument_error("alpha must be in (0,1]");
  std::vector<int> vs = v;
  std::sort(vs.begin(), vs.end());
  if (!std::includes(p.ground().begin(), p.ground().end(), vs.begin(), vs.end()))
    throw invalid_argument_error("subset is not contained in the ground set");

  RestrictionResult r;
  r.delta = alpha * Rational(Int(vs.size()), Int(p.ground_size()));
  for (const auto& cluster : p.clusters()) {
    auto inter = sorted_intersection(cluster, vs);
    // |X ∩ V| >= delta |X|, exact.
    if (Rational(Int(inter.size())) >= r.delta * Int(cluster.size())) {
      r.kept_clusters.push_back(cluster);
      r.coverage += Int(inter.size());
    }
  }
  return r;
}

VertexPartition side_refinement(const VertexPartition& p,
                                const std::vector<int>& v1,
                                const std::vector<int>& v2) {
  std::vector<int> s1 = v1, s2 = v2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  std::vector<std::vector<int>> clusters;
  for (const auto* side : {&s1, &s2})
    for (const auto& cluster : p.clusters()) {
      auto inter = sorted_intersection(cluster, *side);
      if (!inter.empty()) clusters.push_back(std::move(inter));
    }
  return VertexPartition(std::move(clusters));
}

LiftedWitness lift_irregularity_witness(const PatternPair& pp,
                                        const BipartiteGraph& g0,
                                        const std::vector<int>& extra_sizes,
                                        const std::vector<int>& s1,
                                        const std::vector<int>& s2,
                                        const Rational& eps,
                                        const CheckBudget& budget) {
  const int k = pp.k();
  if (eps <= 0 || eps > 1)
    throw invalid_argument_error("eps must be in (0,1]");
  LiftedWitness result;
  if (eps > Rational(1, k_pow_2k(k))) {
    // Claim's proviso fails; the transfer statement is vacuous here.
    result.status = LiftedWitness::Status::vacuous_regime;
    return result;
  }
  result.status = LiftedWitness::Status::lifted;

  Eps eps_prime = Eps::sqrt_of(eps, Rational(k_pow_2k(k)));
  if (s1.empty() || s2.empty())
    throw precondition_error("witness subsets must be nonempty");
  if (eps_prime.cmp(Rational(Int(s1.size()), g0.n1())) < 0 ||
      eps_prime.cmp(Rational(Int(s2.size()), g0.n2())) < 0)
    throw precondition_error("witness subsets are below the eps' size threshold");
  Bitset b1(g0.n1()), b2(g0.n2());
  for (int a : s1) {
    if (a < 0 || a >= g0.n1()) throw precondition_error("S_1 outside side 1");
    b1.set(a);
  }
  for (int b : s2) {
    if (b < 0 || b >= g0.n2()) throw precondition_error("S_2 outside side 2");
    b2.set(b);
  }
  Rational d = g0.density();
  Rational d_star = g0.subgraph_density(b1, b2);
  Rational dev = d_star > d ? d_star - d : d - d_star;
  if (eps_prime.cmp(dev) <= 0)
    throw precondition_error(
        "(S_1,S_2) is not a bipartite irregularity witness at level eps'");

  KPartiteGraph g = build_semi_blowup(pp, g0, extra_sizes);
  result.tuple.resize(k);
  for (int a : s1) result.tuple[0].push_back(a);
  for (int b : s2) result.tuple[1].push_back(g0.n1() + b);
  for (int i = 2; i < k; ++i) result.tuple[i] = g.class_vertices(i);
  for (auto& subset : result.tuple) std::sort(subset.begin(), subset.end());

  TupleView view = make_tuple_view(g, result.tuple);
  result.nf_witness = count_copies(pp.f(), view, budget.transversal_budget).value;
  result.nf_total =
      count_copies(pp.f(), full_view(g), budget.transversal_budget).value;
  result.nf_threshold_met =
      Rational(result.nf_witness) >= eps * Rational(result.nf_total);
  result.coeff_witness = hf_coefficient(pp, view, budget.transversal_budget).value;
  result.coeff_total = hf_coefficient(pp, g, budget.transversal_budget).value;
  Rational cdev = result.coeff_witness > result.coeff_total
                      ? result.coeff_witness - result.coeff_total
                      : result.coeff_total - result.coeff_witness;
  result.coeff_deviates = cdev > eps;
  return result;
}

SliceCertificate slice_check(const KPartiteGraph& t, const PatternPair& pp,
                             const std::vector<std::vector<int>>& y,
                             const std::vector<Rational>& deltas,
                             const Rational& eps,
                             const CheckBudget& budget) {
  const int k = pp.k();
  if (t.k() != k || static_cast<int>(y.size()) != k ||
      static_cast<int>(deltas.size()) != k)
    throw invalid_argument_error("slice arity mismatch");
  if (eps <= 0 || eps > 1)
    throw invalid_argument_error("eps must be in (0,1]");
  for (int i = 0; i < k; ++i) {
    if (y[i].empty()) throw invalid_argument_error("empty slice class");
    for (int v : y[i])
      if (v < 0 || v >= t.n() || t.class_of(v) != i)
        throw invalid_argument_error("Y_" + std::to_string(i + 1) +
                                     " exceeds its class");
    if (Rational(Int(y[i].size())) < deltas[i] * Int(t.class_size(i)))
      throw invalid_argument_error("|Y_i| below delta_i |X_i|");
  }
  KPartiteGraph g = induced_subgraph(t, y);
  // Structural semi-blowup validation: every class pair other than (1,2) is
  // complete when it is an H-edge and empty otherwise.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (i == 0 && j == 1) continue;
      bool want = pp.h().has_edge(i, j);
      for (int u = g.class_begin(i); u < g.class_begin(i) + g.class_size(i); ++u)
        for (int v = g.class_begin(j); v < g.class_begin(j) + g.class_size(j); ++v)
          if (g.has_edge(u, v) != want)
            throw invalid_argument_error("slice is not a semi-blowup of H");
    }

  SliceCertificate cert{};
  Rational delta_product = 1;
  for (const auto& d : deltas) delta_product *= d;
  cert.eps_prime = eps * Rational(factorial(k)) / delta_product;
  cert.vacuous = cert.eps_prime >= 1;

  Int nf_g = count_copies(pp.f(), g, budget.transversal_budget).value;
  Int nf_t = count_copies(pp.f(), t, budget.transversal_budget).value;
  cert.nf_bound_holds =
      Rational(nf_g) >= delta_product / Rational(factorial(k)) * Rational(nf_t);

  cert.transfer_holds = true;
  cert.checked_tuples = 0;
  Verdict t_verdict = check_hf_regular(t, pp, Eps::exact(eps), budget);
  if (t_verdict.regular() && !cert.vacuous && nf_g > 0) {
    Rational coeff_g = hf_coefficient(pp, g, budget.transversal_budget).value;
    TupleView gv = full_view(g);
    std::vector<uint64_t> full(k), masks(k, 1);
    Int total = 1;
    for (int i = 0; i < k; ++i) {
      full[i] = 1ULL << gv.slots[i].size();
      total *= (Int(1) << gv.slots[i].size()) - 1;
    }
    if (total > budget.max_enumerations)
      throw budget_error("slice tuple enumeration exceeds the exact-mode ceiling");
    for (;;) {
      TupleView sub{gv.graph, {}};
      for (int i = 0; i < k; ++i) {
        std::vector<int> slot;
        for (size_t a = 0; a < gv.slots[i].size(); ++a)
          if ((masks[i] >> a) & 1) slot.push_back(gv.slots[i][a]);
        sub.slots.push_back(std::move(slot));
      }
      Int nf = count_copies(pp.f(), sub, budget.transversal_budget).value;
      if (nf > 0 && Rational(nf) >= cert.eps_prime * Rational(nf_g)) {
        ++cert.checked_tuples;
        Int nh = count_copies(pp.h(), sub, budget.transversal_budget).value;
        Rational c(nh, nf);
        Rational dv = c > coeff_g ? c - coeff_g : coeff_g - c;
        if (dv > 2 * eps) cert.transfer_holds = false;
      }
      int pos = k - 1;
      while (pos >= 0 && ++masks[pos] == full[pos]) masks[pos--] = 1;
      if (pos < 0) break;
    }
  }
  return cert;
}

ReductionReport reduce_partition(const PatternPair& pp, const BipartiteGraph& g0,
                                 const VertexPartition& p, const Rational& eps,
                                 bool trusted, const CheckBudget& budget) {
  const int k = pp.k();
  if (eps <= 0 || eps > 1)
    throw invalid_argument_error("eps must be in (0,1]");
  if (g0.n1() != g0.n2())
    throw invalid_argument_error("balanced semi-blowup requires |V_1| = |V_2|");
  const int n = g0.n1();
  std::vector<int> extra(k - 2, n);
  KPartiteGraph g = build_semi_blowup(pp, g0, extra, /*balanced=*/true);
  if (!p.covers_range(g.n()))
    throw invalid_argument_error("P must partition the semi-blowup vertex set");

  ReductionReport report;
  report.eps_in = eps;
  report.input_order = p.order();
  report.eps_out = Eps::quartic_of(eps, Rational(k_pow_2k(k)));
  report.vacuous = report.eps_out.at_least_one();

  if (!trusted) {
    report.input_verdict =
        check_hf_regular_partition(g, p, pp, Eps::exact(eps), budget);
    report.input_checked = true;
  }

  std::vector<int> v1 = g.class_vertices(0), v2 = g.class_vertices(1);
  VertexPartition q = side_refinement(p, v1, v2);
  report.output_partition = q;
  report.output_order = q.order();

  // Filtered families P_i with the proof's delta values.
  Eps delta12 = report.eps_out.half();
  Rational delta_rest(1, 2 * k);
  std::vector<std::vector<std::vector<int>>> p_star(k);
  for (int i = 0; i < k; ++i) {
    std::vector<int> vi = g.class_vertices(i);
    std::sort(vi.begin(), vi.end());
    int kept = 0;
    for (const auto& cluster : p.clusters()) {
      auto inter = sorted_intersection(cluster, vi);
      bool keep;
      Rational frac(Int(inter.size()), Int(cluster.size()));
      if (i < 2)
        keep = delta12.cmp(frac) >= 0;
      else
        keep = frac >= delta_rest;
      if (keep) {
        // delta_i > 0, so a qualifying intersection is nonempty.
        p_star[i].push_back(std::move(inter));
        ++kept;
      }
    }
    report.filtered_orders.push_back(kept);
  }

  // Eq.(4)-style intermediate mass over P_1* × P_2*: irregular-pair edge mass.
  Int mass = 0;
  for (const auto& y1 : p_star[0]) {
    for (const auto& y2 : p_star[1]) {
      std::vector<std::pair<int, int>> edges;
      for (size_t a = 0; a < y1.size(); ++a)
        for (size_t b = 0; b < y2.size(); ++b)
          if (g0.has_edge(y1[a], y2[b] - n))
            edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
      size_t pair_edges = edges.size();
      BipartiteGraph sub(static_cast<int>(y1.size()),
                         static_cast<int>(y2.size()), edges);
      Verdict pv = check_bipartite_regular(sub, report.eps_out, budget);
      if (pv.kind == Verdict::Kind::irregular) mass += Int(pair_edges);
    }
  }
  report.intermediate_mass = Rational(mass);
  Int two_k = Int(1) << k;
  report.intermediate_bound = eps * Rational(two_k * Int(g0.edge_count()));
  report.intermediate_bound_holds =
      report.intermediate_mass <= report.intermediate_bound;

  report.output_verdict = check_regular_partition(g0, q, report.eps_out, budget);
  return report;
}

std::string reduction_report_to_json(const ReductionReport& r) {
  nlohmann::ordered_json j;
  j["input_order"] = r.input_order;
  j["output_order"] = r.output_order;
  j["eps_in"] = format_rational(r.eps_in);
  j["eps_out"] = r.eps_out.str();
  j["vacuous"] = r.vacuous;
  if (r.input_checked)
    j["input_verdict"] = nlohmann::ordered_json::parse(
        verdict_to_json(r.input_verdict, "hf-partition", Eps::exact(r.eps_in)));
  j["output_verdict"] = nlohmann::ordered_json::parse(
      verdict_to_json(r.output_verdict, "bipartite-partition", r.eps_out));
  j["output_partition"] = r.output_partition.clusters();
  j["filtered_orders"] = r.filtered_orders;
  j["intermediate_mass"] = format_rational(r.intermediate_mass);
  j["intermediate_bound"] = format_rational(r.intermediate_bound);
  j["intermediate_bound_holds"] = r.intermediate_bound_holds;
  return j.dump(2);
}

}  // namespace hfreg
