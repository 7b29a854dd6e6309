#include "regularity.hpp"

#include <json.hpp>

#include <algorithm>
#include <thread>

#include "rng.hpp"

namespace hfreg {

namespace {

Bitset mask_to_bitset(uint64_t mask, int n) {
  Bitset b(n);
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1) b.set(i);
  return b;
}

std::vector<int> mask_to_vertices(uint64_t mask, const std::vector<int>& pool) {
  std::vector<int> out;
  for (size_t i = 0; i < pool.size(); ++i)
    if ((mask >> i) & 1) out.push_back(pool[i]);
  return out;
}

// Qualifying side subsets: |S| >= eps * |V|, exact rational comparison.
bool side_qualifies(int subset_size, int side_size, const Eps& eps) {
  return eps.cmp(Rational(subset_size, side_size)) >= 0;
}

struct BipartiteScan {
  bool found = false;
  uint64_t mask1 = 0, mask2 = 0;
  Rational observed;
  uint64_t enumerated = 0;
};

BipartiteScan scan_bipartite(const BipartiteGraph& g0, const Eps& eps,
                             const Rational& d, uint64_t lo1, uint64_t hi1) {
  BipartiteScan r;
  const int n1 = g0.n1(), n2 = g0.n2();
  const uint64_t full2 = (1ULL << n2);
  for (uint64_t m1 = lo1; m1 < hi1 && !r.found; ++m1) {
    if (m1 == 0) continue;
    int c1 = std::popcount(m1);
    if (!side_qualifies(c1, n1, eps)) continue;
    Bitset s1 = mask_to_bitset(m1, n1);
    for (uint64_t m2 = 1; m2 < full2; ++m2) {
      int c2 = std::popcount(m2);
      if (!side_qualifies(c2, n2, eps)) continue;
      ++r.enumerated;
      Bitset s2 = mask_to_bitset(m2, n2);
      Rational d_star(Int(g0.edges_between(s1, s2)), Int(c1) * c2);
      Rational dev = d_star > d ? d_star - d : d - d_star;
      if (eps.cmp(dev) > 0) {
        r.found = true;
        r.mask1 = m1;
        r.mask2 = m2;
        r.observed = d_star;
        break;
      }
    }
  }
  return r;
}

}  // namespace

Verdict check_bipartite_regular(const BipartiteGraph& g0, const Eps& eps,
                                const CheckBudget& budget) {
  if (!eps.positive()) throw invalid_argument_error("eps must be positive");
  Verdict v;
  if (eps.at_least_one()) {
    // Densities live in [0,1], so every deviation is within eps.
    v.vacuous = true;
    return v;
  }
  const int n1 = g0.n1(), n2 = g0.n2();
  if (n1 >= 63 || n2 >= 63 ||
      (Int(1) << (n1 + n2)) > Int(budget.max_enumerations))
    throw budget_error("bipartite subset enumeration 2^" +
                       std::to_string(n1 + n2) + " exceeds the exact-mode ceiling");
  Rational d = g0.density();

  const uint64_t full1 = 1ULL << n1;
  int workers = std::max(1, budget.workers);
  std::vector<BipartiteScan> results;
  if (workers == 1) {
    results.push_back(scan_bipartite(g0, eps, d, 1, full1));
  } else {
    size_t nw = std::min<uint64_t>(workers, full1 - 1);
    results.resize(nw);
    std::vector<std::thread> threads;
    for (size_t w = 0; w < nw; ++w) {
      uint64_t lo = 1 + (full1 - 1) * w / nw;
      uint64_t hi = 1 + (full1 - 1) * (w + 1) / nw;
      threads.emplace_back(
          [&, w, lo, hi] { results[w] = scan_bipartite(g0, eps, d, lo, hi); });
    }
    for (auto& t : threads) t.join();
  }

  const BipartiteScan* best = nullptr;
  for (const auto& r : results) {
    v.enumerated += r.enumerated;
    if (r.found && (!best || r.mask1 < best->mask1 ||
                    (r.mask1 == best->mask1 && r.mask2 < best->mask2)))
      best = &r;
  }
  if (best) {
    v.kind = Verdict::Kind::irregular;
    Witness w;
    std::vector<int> side1(n1), side2(n2);
    for (int i = 0; i < n1; ++i) side1[i] = i;
    for (int i = 0; i < n2; ++i) side2[i] = n1 + i;
    w.subsets = {mask_to_vertices(best->mask1, side1),
                 mask_to_vertices(best->mask2, side2)};
    w.reference = d;
    w.observed = best->observed;
    v.witness = std::move(w);
  }
  return v;
}

namespace {

struct HfScan {
  bool found = false;
  std::vector<uint64_t> masks;
  Rational observed;
  uint64_t enumerated = 0;
};

TupleView subview(const TupleView& view, const std::vector<uint64_t>& masks) {
  TupleView sub{view.graph, {}};
  for (size_t i = 0; i < view.slots.size(); ++i)
    sub.slots.push_back(mask_to_vertices(masks[i], view.slots[i]));
  return sub;
}

HfScan scan_hf(const TupleView& view, const PatternPair& pp, const Eps& eps,
               const Int& nf_total, const Rational& coeff, uint64_t lo1,
               uint64_t hi1, const CheckBudget& budget) {
  HfScan r;
  const int k = pp.k();
  std::vector<uint64_t> full(k);
  for (int i = 0; i < k; ++i) full[i] = 1ULL << view.slots[i].size();
  std::vector<uint64_t> masks(k, 1);
  masks[0] = lo1;
  if (masks[0] == 0) masks[0] = 1;
  // Odometer over nonempty subset masks, mask[0] outermost.
  while (masks[0] < hi1) {
    ++r.enumerated;
    TupleView sub = subview(view, masks);
    Int nf = count_copies(pp.f(), sub, budget.transversal_budget).value;
    if (nf > 0 && eps.cmp(Rational(nf, nf_total)) >= 0) {
      Int nh = count_copies(pp.h(), sub, budget.transversal_budget).value;
      Rational c(nh, nf);
      Rational dev = c > coeff ? c - coeff : coeff - c;
      if (eps.cmp(dev) > 0) {
        r.found = true;
        r.masks = masks;
        r.observed = c;
        return r;
      }
    }
    // Advance.
    int pos = k - 1;
    while (pos >= 0) {
      if (++masks[pos] < full[pos]) break;
      if (pos == 0) return r;  // hi1 check is the while condition for pos 0
      masks[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
  }
  return r;
}

}  // namespace

Verdict check_hf_regular(const TupleView& view, const PatternPair& pp,
                         const Eps& eps, const CheckBudget& budget) {
  if (!eps.positive()) throw invalid_argument_error("eps must be positive");
  if (static_cast<int>(view.slots.size()) != pp.k())
    throw invalid_argument_error("pattern/graph class count mismatch");
  Verdict v;
  Int nf_total = count_copies(pp.f(), view, budget.transversal_budget).value;
  if (nf_total == 0) {
    v.kind = Verdict::Kind::undefined;
    return v;
  }
  Int nh_total = count_copies(pp.h(), view, budget.transversal_budget).value;
  Rational coeff(nh_total, nf_total);
  v.vacuous = eps.at_least_one();

  Int total_tuples = 1;
  for (const auto& slot : view.slots) total_tuples *= (Int(1) << slot.size()) - 1;
  if (total_tuples > budget.max_enumerations)
    throw budget_error("subset-tuple enumeration " + total_tuples.str() +
                       " exceeds the exact-mode ceiling");

  const uint64_t full1 = 1ULL << view.slots[0].size();
  int workers = std::max(1, budget.workers);
  std::vector<HfScan> results;
  if (workers == 1) {
    results.push_back(scan_hf(view, pp, eps, nf_total, coeff, 1, full1, budget));
  } else {
    size_t nw = std::min<uint64_t>(workers, full1 - 1);
    results.resize(nw);
    std::vector<std::thread> threads;
    for (size_t w = 0; w < nw; ++w) {
      uint64_t lo = 1 + (full1 - 1) * w / nw;
      uint64_t hi = 1 + (full1 - 1) * (w + 1) / nw;
      threads.emplace_back([&, w, lo, hi] {
        results[w] = scan_hf(view, pp, eps, nf_total, coeff, lo, hi, budget);
      });
    }
    for (auto& t : threads) t.join();
  }

  const HfScan* best = nullptr;
  for (const auto& r : results) {
    v.enumerated += r.enumerated;
    if (r.found && (!best || r.masks < best->masks)) best = &r;
  }
  if (best) {
    v.kind = Verdict::Kind::irregular;
    Witness w;
    for (size_t i = 0; i < view.slots.size(); ++i)
      w.subsets.push_back(mask_to_vertices(best->masks[i], view.slots[i]));
    w.reference = coeff;
    w.observed = best->observed;
    v.witness = std::move(w);
  }
  return v;
}

Verdict check_hf_regular(const KPartiteGraph& g, const PatternPair& pp,
                         const Eps& eps, const CheckBudget& budget) {
  return check_hf_regular(full_view(g), pp, eps, budget);
}

Verdict check_regular_partition(const BipartiteGraph& g0,
                                const VertexPartition& q, const Eps& eps,
                                const CheckBudget& budget) {
  if (!eps.positive()) throw invalid_argument_error("eps must be positive");
  const int n1 = g0.n1(), n2 = g0.n2(), n = n1 + n2;
  if (!q.covers_range(n))
    throw invalid_argument_error("partition must cover the graph's vertex set");
  std::vector<const std::vector<int>*> side1, side2;
  for (const auto& cluster : q.clusters()) {
    bool in1 = cluster.front() < n1, in2 = cluster.back() >= n1;
    if (in1 && in2)
      throw invalid_argument_error("partition is not side-pure");
    (in1 ? side1 : side2).push_back(&cluster);
  }

  Verdict v;
  v.vacuous = eps.at_least_one();
  Int mass = 0;
  for (const auto* c1 : side1) {
    for (const auto* c2 : side2) {
      // Induced bipartite subgraph on (c1, c2).
      std::vector<std::pair<int, int>> edges;
      for (size_t a = 0; a < c1->size(); ++a)
        for (size_t b = 0; b < c2->size(); ++b)
          if (g0.has_edge((*c1)[a], (*c2)[b] - n1))
            edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
      BipartiteGraph sub(static_cast<int>(c1->size()),
                         static_cast<int>(c2->size()), edges);
      Verdict pair_verdict = check_bipartite_regular(sub, eps, budget);
      v.enumerated += pair_verdict.enumerated;
      if (pair_verdict.kind == Verdict::Kind::irregular)
        mass += Int(c1->size()) * Int(c2->size());
    }
  }
  v.irregular_mass = Rational(mass);
  v.kind = eps.cmp(Rational(mass, Int(n) * n)) >= 0 ? Verdict::Kind::regular
                                                    : Verdict::Kind::irregular;
  return v;
}

Verdict check_hf_regular_partition(const KPartiteGraph& g,
                                   const VertexPartition& p,
                                   const PatternPair& pp, const Eps& eps,
                                   const CheckBudget& budget) {
  if (!eps.positive()) throw invalid_argument_error("eps must be positive");
  if (!p.covers_range(g.n()))
    throw invalid_argument_error("partition must cover the graph's vertex set");
  Verdict v;
  Int nh_total = count_copies(pp.h(), g, budget.transversal_budget).value;
  if (nh_total == 0) {
    v.kind = Verdict::Kind::undefined;
    return v;
  }
  v.vacuous = eps.at_least_one();

  const int k = g.k();
  const int order = p.order();
  Int tuple_count = 1;
  for (int i = 0; i < k; ++i) tuple_count *= order;
  if (tuple_count > budget.max_enumerations)
    throw budget_error("cluster-tuple enumeration " + tuple_count.str() +
                       " exceeds the exact-mode ceiling");

  Int exceptional = 0;
  Int classified = 0;
  std::vector<int> tuple(k, 0);
  for (;;) {
    std::vector<std::vector<int>> clusters;
    clusters.reserve(k);
    for (int i = 0; i < k; ++i) clusters.push_back(p.cluster(tuple[i]));
    TupleView view = make_tuple_view(g, clusters);
    bool nonempty = std::all_of(view.slots.begin(), view.slots.end(),
                                [](const auto& s) { return !s.empty(); });
    if (nonempty) {
      Int nh = count_copies(pp.h(), view, budget.transversal_budget).value;
      if (nh > 0) {
        ++v.enumerated;
        classified += nh;
        Verdict tv = check_hf_regular(view, pp, eps, budget);
        if (tv.kind != Verdict::Kind::regular) exceptional += nh;
      }
    }
    int pos = k - 1;
    while (pos >= 0 && ++tuple[pos] == order) tuple[pos--] = 0;
    if (pos < 0) break;
  }
  if (classified != nh_total)
    throw invalid_argument_error("internal: copy classification mismatch");
  v.irregular_mass = Rational(exceptional);
  v.kind = eps.cmp(Rational(exceptional, nh_total)) >= 0
               ? Verdict::Kind::regular
               : Verdict::Kind::irregular;
  return v;
}

Verdict sampled_irregularity_probe(const KPartiteGraph& g,
                                   const PatternPair* pp, const Eps& eps,
                                   const CheckBudget& budget) {
  if (!eps.positive()) throw invalid_argument_error("eps must be positive");
  Verdict v;
  Rng rng(budget.seed);
  if (pp == nullptr) {
    BipartiteGraph g0(g);
    Rational d = g0.density();
    for (uint64_t s = 0; s < budget.sample_count; ++s) {
      uint64_t m1 = rng.next() & ((1ULL << g0.n1()) - 1);
      uint64_t m2 = rng.next() & ((1ULL << g0.n2()) - 1);
      int c1 = std::popcount(m1), c2 = std::popcount(m2);
      ++v.enumerated;
      if (c1 == 0 || c2 == 0) continue;
      if (!side_qualifies(c1, g0.n1(), eps) || !side_qualifies(c2, g0.n2(), eps))
        continue;
      Bitset s1 = mask_to_bitset(m1, g0.n1()), s2 = mask_to_bitset(m2, g0.n2());
      // Exact re-check of the sampled candidate.
      Rational d_star = g0.subgraph_density(s1, s2);
      Rational dev = d_star > d ? d_star - d : d - d_star;
      if (eps.cmp(dev) > 0) {
        v.kind = Verdict::Kind::irregular;
        Witness w;
        std::vector<int> side1(g0.n1()), side2(g0.n2());
        for (int i = 0; i < g0.n1(); ++i) side1[i] = i;
        for (int i = 0; i < g0.n2(); ++i) side2[i] = g0.n1() + i;
        w.subsets = {mask_to_vertices(m1, side1), mask_to_vertices(m2, side2)};
        w.reference = d;
        w.observed = d_star;
        v.witness = std::move(w);
        return v;
      }
    }
  } else {
    TupleView view = full_view(g);
    Int nf_total = count_copies(pp->f(), view, budget.transversal_budget).value;
    if (nf_total == 0) {
      v.kind = Verdict::Kind::undefined;
      return v;
    }
    Int nh_total = count_copies(pp->h(), view, budget.transversal_budget).value;
    Rational coeff(nh_total, nf_total);
    for (uint64_t s = 0; s < budget.sample_count; ++s) {
      std::vector<uint64_t> masks(g.k());
      bool empty = false;
      for (int i = 0; i < g.k(); ++i) {
        masks[i] = rng.next() & ((1ULL << g.class_size(i)) - 1);
        empty |= masks[i] == 0;
      }
      ++v.enumerated;
      if (empty) continue;
      TupleView sub = subview(view, masks);
      Int nf = count_copies(pp->f(), sub, budget.transversal_budget).value;
      if (nf == 0 || eps.cmp(Rational(nf, nf_total)) < 0) continue;
      Int nh = count_copies(pp->h(), sub, budget.transversal_budget).value;
      Rational c(nh, nf);
      Rational dev = c > coeff ? c - coeff : coeff - c;
      if (eps.cmp(dev) > 0) {
        v.kind = Verdict::Kind::irregular;
        Witness w;
        for (int i = 0; i < g.k(); ++i)
          w.subsets.push_back(mask_to_vertices(masks[i], view.slots[i]));
        w.reference = coeff;
        w.observed = c;
        v.witness = std::move(w);
        return v;
      }
    }
  }
  v.kind = Verdict::Kind::no_witness_found;
  return v;
}

std::string verdict_to_json(const Verdict& v, const std::string& notion,
                            const Eps& eps, double elapsed_seconds,
                            bool with_timings) {
  nlohmann::ordered_json j;
  j["notion"] = notion;
  j["eps"] = eps.str();
  switch (v.kind) {
    case Verdict::Kind::regular: j["verdict"] = "regular"; break;
    case Verdict::Kind::irregular: j["verdict"] = "irregular"; break;
    case Verdict::Kind::undefined: j["verdict"] = "undefined"; break;
    case Verdict::Kind::no_witness_found: j["verdict"] = "no-witness-found"; break;
  }
  j["regular"] = v.kind == Verdict::Kind::regular;
  if (v.witness) {
    nlohmann::ordered_json w;
    w["subsets"] = v.witness->subsets;
    w["reference"] = format_rational(v.witness->reference);
    w["observed"] = format_rational(v.witness->observed);
    j["witness"] = std::move(w);
  }
  if (v.irregular_mass) j["mass"] = format_rational(*v.irregular_mass);
  j["vacuous"] = v.vacuous;
  j["enumerated"] = v.enumerated;
  j["elapsed"] = with_timings ? elapsed_seconds : 0.0;
  return j.dump(2);
}

}  // namespace hfreg
