#include "counting.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

namespace hfreg {

Int automorphism_count(const Pattern& p) {
  int k = p.k();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Int count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : p.edges())
      if (!p.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {

struct SlotPlan {
  std::vector<int> order;  // slot visit order, ascending size
  // For a fixed pattern-vertex-to-slot assignment, required[j] holds the
  // positions j' < j (in visit order) whose chosen vertex must be adjacent.
  std::vector<uint32_t> required;
};

// Counts tuples (one vertex per slot, visited in plan order) satisfying the
// adjacency requirements, with the outermost choice restricted to
// [outer_lo, outer_hi) of the first slot's vertex list.
uint64_t count_assignments(const TupleView& view, const SlotPlan& plan,
                           size_t outer_lo, size_t outer_hi) {
  const auto& g = *view.graph;
  int k = static_cast<int>(plan.order.size());
  std::vector<int> chosen(k);
  uint64_t total = 0;

  // Iterative DFS over slot positions.
  std::vector<size_t> idx(k, 0);
  int depth = 0;
  idx[0] = outer_lo;
  while (depth >= 0) {
    const auto& slot = view.slots[plan.order[depth]];
    size_t limit = depth == 0 ? outer_hi : slot.size();
    bool advanced = false;
    while (idx[depth] < limit) {
      int v = slot[idx[depth]++];
      bool ok = true;
      uint32_t need = plan.required[depth];
      while (need) {
        int j = std::countr_zero(need);
        need &= need - 1;
        if (!g.has_edge(chosen[j], v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen[depth] = v;
      if (depth + 1 == k) {
        ++total;
      } else {
        ++depth;
        idx[depth] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) --depth;
  }
  return total;
}

void check_budget(const TupleView& view, uint64_t budget) {
  Int product = 1;
  for (const auto& slot : view.slots) product *= static_cast<uint64_t>(slot.size());
  if (product > budget)
    throw budget_error("transversal count " + product.str() +
                       " exceeds enumeration budget " + std::to_string(budget));
}

}  // namespace

Int count_labeled(const Pattern& p, const TupleView& view, uint64_t budget) {
  const int k = static_cast<int>(view.slots.size());
  if (p.k() != k)
    throw invalid_argument_error("pattern vertex count differs from class count");
  for (const auto& slot : view.slots)
    if (slot.empty()) return 0;
  check_budget(view, budget);

  SlotPlan plan;
  plan.order.resize(k);
  std::iota(plan.order.begin(), plan.order.end(), 0);
  std::stable_sort(plan.order.begin(), plan.order.end(), [&](int a, int b) {
    return view.slots[a].size() < view.slots[b].size();
  });
  plan.required.assign(k, 0);

  // Sum over all assignments of pattern vertices to slots.
  std::vector<int> pv(k);
  std::iota(pv.begin(), pv.end(), 0);
  Int total = 0;
  do {
    // pv[j] = pattern vertex placed at visit position j.
    for (int j = 0; j < k; ++j) {
      uint32_t req = 0;
      for (int j2 = 0; j2 < j; ++j2)
        if (p.has_edge(pv[j], pv[j2])) req |= 1u << j2;
      plan.required[j] = req;
    }
    total += count_assignments(view, plan, 0, view.slots[plan.order[0]].size());
  } while (std::next_permutation(pv.begin(), pv.end()));
  return total;
}

CopyCount count_copies(const Pattern& p, const TupleView& view, uint64_t budget,
                       int workers) {
  const int k = static_cast<int>(view.slots.size());
  if (p.k() != k)
    throw invalid_argument_error("pattern vertex count differs from class count");
  Int aut = automorphism_count(p);

  Int labeled;
  bool any_empty = std::any_of(view.slots.begin(), view.slots.end(),
                               [](const auto& s) { return s.empty(); });
  if (any_empty) {
    labeled = 0;
  } else if (workers <= 1) {
    labeled = count_labeled(p, view, budget);
  } else {
    check_budget(view, budget);
    // Split the outermost vertex choice of each permutation across workers by
    // chunking the (size-sorted) first slot; the exact integer sum is
    // schedule-independent.
    SlotPlan base;
    base.order.resize(k);
    std::iota(base.order.begin(), base.order.end(), 0);
    std::stable_sort(base.order.begin(), base.order.end(), [&](int a, int b) {
      return view.slots[a].size() < view.slots[b].size();
    });
    size_t outer = view.slots[base.order[0]].size();
    size_t nworkers = std::min<size_t>(static_cast<size_t>(workers), outer);
    std::vector<Int> partial(nworkers, 0);
    std::vector<std::thread> threads;
    for (size_t w = 0; w < nworkers; ++w) {
      size_t lo = outer * w / nworkers;
      size_t hi = outer * (w + 1) / nworkers;
      threads.emplace_back([&, w, lo, hi] {
        SlotPlan plan = base;
        plan.required.assign(k, 0);
        std::vector<int> pv(k);
        std::iota(pv.begin(), pv.end(), 0);
        Int sum = 0;
        do {
          for (int j = 0; j < k; ++j) {
            uint32_t req = 0;
            for (int j2 = 0; j2 < j; ++j2)
              if (p.has_edge(pv[j], pv[j2])) req |= 1u << j2;
            plan.required[j] = req;
          }
          sum += count_assignments(view, plan, lo, hi);
        } while (std::next_permutation(pv.begin(), pv.end()));
        partial[w] = std::move(sum);
      });
    }
    for (auto& t : threads) t.join();
    labeled = 0;
    for (const auto& part : partial) labeled += part;
  }

  Int unlabeled = labeled / aut;
  if (unlabeled * aut != labeled)
    throw invalid_argument_error("internal: labeled count not divisible by |Aut|");
  return {std::move(unlabeled), CountConvention::unlabeled};
}

CopyCount count_copies(const Pattern& p, const KPartiteGraph& g, uint64_t budget,
                       int workers) {
  return count_copies(p, full_view(g), budget, workers);
}

Rational density(const BipartiteGraph& g0) { return g0.density(); }

Coefficient hf_coefficient(const PatternPair& pp, const TupleView& view,
                           uint64_t budget) {
  Int f = count_copies(pp.f(), view, budget).value;
  if (f == 0)
    throw zero_denominator_error(
        "(H,F)-coefficient undefined: graph contains no transversal copy of F");
  Int h = count_copies(pp.h(), view, budget).value;
  return {Rational(h, f), std::move(h), std::move(f)};
}

Coefficient hf_coefficient(const PatternPair& pp, const KPartiteGraph& g,
                           uint64_t budget) {
  return hf_coefficient(pp, full_view(g), budget);
}

}  // namespace hfreg
