#include "hfreg.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "counting.hpp"
#include "graph.hpp"
#include "harness.hpp"
#include "pattern.hpp"
#include "rational.hpp"
#include "reduction.hpp"
#include "regularity.hpp"
#include "semiblowup.hpp"

struct hfreg_graph {
  hfreg::KPartiteGraph g;
};
struct hfreg_pattern {
  hfreg::PatternPair pp;
};
struct hfreg_partition {
  hfreg::VertexPartition p;
};

namespace {

thread_local std::string g_last_error;

int error_code(hfreg::Error::Kind kind) {
  using Kind = hfreg::Error::Kind;
  switch (kind) {
    case Kind::parse:
      return HFREG_ERR_PARSE;
    case Kind::invalid_argument:
      return HFREG_ERR_INVALID;
    case Kind::zero_denominator:
      return HFREG_ERR_INVALID;
    case Kind::budget_exceeded:
      return HFREG_ERR_BUDGET;
    case Kind::precondition:
      return HFREG_ERR_PRECONDITION;
    case Kind::io:
      return HFREG_ERR_IO;
  }
  return HFREG_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_out(char** out, const std::string& s) {
  if (out != nullptr) *out = dup_string(s);
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const hfreg::Error& e) {
    g_last_error = e.what();
    return error_code(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HFREG_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return HFREG_ERR_INTERNAL;
  }
}

int require(bool cond, const char* what) {
  if (cond) return HFREG_OK;
  throw hfreg::invalid_argument_error(std::string("null argument: ") + what);
}

std::vector<int> to_vector(const int* data, int count, const char* what) {
  if (count < 0) {
    throw hfreg::invalid_argument_error(std::string(what) + ": negative count");
  }
  if (count > 0 && data == nullptr) {
    throw hfreg::invalid_argument_error(std::string(what) + ": null array");
  }
  return std::vector<int>(data, data + count);
}

int verdict_status(const hfreg::Verdict& v) {
  using Kind = hfreg::Verdict::Kind;
  switch (v.kind) {
    case Kind::regular:
      return HFREG_OK;
    case Kind::irregular:
      return HFREG_IRREGULAR;
    case Kind::undefined:
    case Kind::no_witness_found:
      return HFREG_UNDEFINED;
  }
  return HFREG_ERR_INTERNAL;
}

}  // namespace

extern "C" {

const char* hfreg_last_error(void) { return g_last_error.c_str(); }

void hfreg_free_string(char* s) { std::free(s); }

int hfreg_graph_parse(const char* text, hfreg_graph** out) {
  return guarded([&] {
    require(text != nullptr, "text");
    require(out != nullptr, "out");
    *out = new hfreg_graph{hfreg::parse_graph(text)};
    return HFREG_OK;
  });
}

int hfreg_graph_serialize(const hfreg_graph* g, char** out) {
  return guarded([&] {
    require(g != nullptr, "graph");
    require(out != nullptr, "out");
    set_out(out, hfreg::serialize_graph(g->g));
    return HFREG_OK;
  });
}

void hfreg_graph_free(hfreg_graph* g) { delete g; }

int hfreg_generate(const char* kind, const int* sizes, int nsizes,
                   const char* p, uint64_t seed, hfreg_graph** out) {
  return guarded([&] {
    require(kind != nullptr, "kind");
    require(out != nullptr, "out");
    hfreg::GeneratorParams params;
    params.kind = hfreg::parse_generator_kind(kind);
    params.sizes = to_vector(sizes, nsizes, "sizes");
    if (p != nullptr) params.edge_probability = hfreg::parse_rational(p);
    params.seed = seed;
    *out = new hfreg_graph{hfreg::generate(params)};
    return HFREG_OK;
  });
}

int hfreg_blowup(const hfreg_pattern* pp, const int* sizes, int nsizes,
                 hfreg_graph** out) {
  return guarded([&] {
    require(pp != nullptr, "pattern");
    require(out != nullptr, "out");
    *out = new hfreg_graph{
        hfreg::build_blowup(pp->pp.h(), to_vector(sizes, nsizes, "sizes"))};
    return HFREG_OK;
  });
}

int hfreg_semiblowup(const hfreg_pattern* pp, const hfreg_graph* g0,
                     const int* extra_sizes, int nsizes, hfreg_graph** out) {
  return guarded([&] {
    require(pp != nullptr, "pattern");
    require(g0 != nullptr, "g0");
    require(out != nullptr, "out");
    hfreg::BipartiteGraph bip(g0->g);
    *out = new hfreg_graph{hfreg::build_semi_blowup(
        pp->pp, bip, to_vector(extra_sizes, nsizes, "extra_sizes"))};
    return HFREG_OK;
  });
}

int hfreg_add_isolated(const hfreg_graph* g, const int* extra, int k,
                       hfreg_graph** out) {
  return guarded([&] {
    require(g != nullptr, "graph");
    require(out != nullptr, "out");
    *out = new hfreg_graph{
        hfreg::add_isolated_vertices(g->g, to_vector(extra, k, "extra"))};
    return HFREG_OK;
  });
}

int hfreg_pattern_parse(const char* text, hfreg_pattern** out) {
  return guarded([&] {
    require(text != nullptr, "text");
    require(out != nullptr, "out");
    *out = new hfreg_pattern{hfreg::parse_pattern_pair(text)};
    return HFREG_OK;
  });
}

int hfreg_pattern_serialize(const hfreg_pattern* pp, char** out) {
  return guarded([&] {
    require(pp != nullptr, "pattern");
    require(out != nullptr, "out");
    set_out(out, hfreg::serialize_pattern_pair(pp->pp));
    return HFREG_OK;
  });
}

void hfreg_pattern_free(hfreg_pattern* pp) { delete pp; }

int hfreg_partition_parse(const char* text, hfreg_partition** out) {
  return guarded([&] {
    require(text != nullptr, "text");
    require(out != nullptr, "out");
    *out = new hfreg_partition{hfreg::parse_partition(text)};
    return HFREG_OK;
  });
}

int hfreg_partition_serialize(const hfreg_partition* p, char** out) {
  return guarded([&] {
    require(p != nullptr, "partition");
    require(out != nullptr, "out");
    set_out(out, hfreg::serialize_partition(p->p));
    return HFREG_OK;
  });
}

void hfreg_partition_free(hfreg_partition* p) { delete p; }

int hfreg_count(const hfreg_pattern* pp, char which, const hfreg_graph* g,
                int workers, char** out_count) {
  return guarded([&] {
    require(pp != nullptr, "pattern");
    require(g != nullptr, "graph");
    require(out_count != nullptr, "out_count");
    if (which != 'H' && which != 'F') {
      throw hfreg::invalid_argument_error("which must be 'H' or 'F'");
    }
    if (workers < 1) {
      throw hfreg::invalid_argument_error("workers must be >= 1");
    }
    const hfreg::Pattern& pattern =
        which == 'H' ? pp->pp.h() : pp->pp.f();
    hfreg::CopyCount count = hfreg::count_copies(
        pattern, g->g, hfreg::kDefaultTransversalBudget, workers);
    set_out(out_count, count.value.str());
    return HFREG_OK;
  });
}

int hfreg_coeff(const hfreg_pattern* pp, const hfreg_graph* g, char** out) {
  return guarded([&] {
    require(pp != nullptr, "pattern");
    require(g != nullptr, "graph");
    require(out != nullptr, "out");
    try {
      hfreg::Coefficient c = hfreg::hf_coefficient(pp->pp, g->g);
      set_out(out, hfreg::format_rational(c.value));
      return HFREG_OK;
    } catch (const hfreg::Error& e) {
      if (e.kind() != hfreg::Error::Kind::zero_denominator) throw;
      set_out(out, "undefined");
      return HFREG_UNDEFINED;
    }
  });
}

int hfreg_density(const hfreg_graph* g, char** out) {
  return guarded([&] {
    require(g != nullptr, "graph");
    require(out != nullptr, "out");
    hfreg::BipartiteGraph bip(g->g);
    set_out(out, hfreg::format_rational(bip.density()));
    return HFREG_OK;
  });
}

int hfreg_check(const hfreg_graph* g, const hfreg_pattern* pp,
                const hfreg_partition* partition, const char* notion,
                const char* eps, const char* mode, uint64_t seed,
                uint64_t samples, int workers, char** out_json) {
  return guarded([&] {
    require(g != nullptr, "graph");
    require(notion != nullptr, "notion");
    require(eps != nullptr, "eps");
    if (workers < 1) {
      throw hfreg::invalid_argument_error("workers must be >= 1");
    }
    const std::string notion_name = notion;
    const std::string mode_name = mode == nullptr ? "exact" : mode;
    hfreg::CheckBudget budget;
    if (mode_name == "exact") {
      budget.mode = hfreg::CheckBudget::Mode::exact;
    } else if (mode_name == "sampled") {
      budget.mode = hfreg::CheckBudget::Mode::sampled;
    } else {
      throw hfreg::invalid_argument_error("unknown mode: " + mode_name);
    }
    budget.seed = seed;
    if (samples > 0) budget.sample_count = samples;
    budget.workers = workers;
    hfreg::Eps level = hfreg::Eps::exact(hfreg::parse_rational(eps));

    hfreg::Verdict verdict;
    if (notion_name == "bipartite") {
      if (budget.mode == hfreg::CheckBudget::Mode::exact) {
        hfreg::BipartiteGraph bip(g->g);
        verdict = hfreg::check_bipartite_regular(bip, level, budget);
      } else {
        verdict =
            hfreg::sampled_irregularity_probe(g->g, nullptr, level, budget);
      }
    } else if (notion_name == "hf") {
      require(pp != nullptr, "pattern");
      if (budget.mode == hfreg::CheckBudget::Mode::exact) {
        verdict = hfreg::check_hf_regular(g->g, pp->pp, level, budget);
      } else {
        verdict =
            hfreg::sampled_irregularity_probe(g->g, &pp->pp, level, budget);
      }
    } else if (notion_name == "bipartite-partition") {
      require(partition != nullptr, "partition");
      hfreg::BipartiteGraph bip(g->g);
      verdict =
          hfreg::check_regular_partition(bip, partition->p, level, budget);
    } else if (notion_name == "hf-partition") {
      require(pp != nullptr, "pattern");
      require(partition != nullptr, "partition");
      verdict = hfreg::check_hf_regular_partition(g->g, partition->p, pp->pp,
                                                  level, budget);
    } else {
      throw hfreg::invalid_argument_error("unknown notion: " + notion_name);
    }

    set_out(out_json, hfreg::verdict_to_json(verdict, notion_name, level));
    return verdict_status(verdict);
  });
}

int hfreg_refine(const hfreg_partition* p, const hfreg_graph* g,
                 char** out_partition) {
  return guarded([&] {
    require(p != nullptr, "partition");
    require(g != nullptr, "graph");
    require(out_partition != nullptr, "out_partition");
    if (g->g.k() < 2) {
      throw hfreg::invalid_argument_error("refine requires k >= 2");
    }
    hfreg::VertexPartition q = hfreg::side_refinement(
        p->p, g->g.class_vertices(0), g->g.class_vertices(1));
    set_out(out_partition, hfreg::serialize_partition(q));
    return HFREG_OK;
  });
}

int hfreg_reduce(const hfreg_pattern* pp, const hfreg_graph* g0,
                 const hfreg_partition* p, const char* eps, int trusted,
                 char** out_json) {
  return guarded([&] {
    require(pp != nullptr, "pattern");
    require(g0 != nullptr, "g0");
    require(p != nullptr, "partition");
    require(eps != nullptr, "eps");
    hfreg::BipartiteGraph bip(g0->g);
    hfreg::ReductionReport report = hfreg::reduce_partition(
        pp->pp, bip, p->p, hfreg::parse_rational(eps), trusted != 0);
    set_out(out_json, hfreg::reduction_report_to_json(report));
    if (report.vacuous) return HFREG_UNDEFINED;
    return report.output_verdict.regular() ? HFREG_OK : HFREG_IRREGULAR;
  });
}

int hfreg_search_min(const hfreg_graph* g, const hfreg_pattern* pp,
                     const char* notion, const char* eps, int max_n,
                     char** out_json) {
  return guarded([&] {
    require(g != nullptr, "graph");
    require(notion != nullptr, "notion");
    require(eps != nullptr, "eps");
    require(out_json != nullptr, "out_json");
    hfreg::Notion parsed = hfreg::parse_notion(notion);
    if (parsed == hfreg::Notion::hf) require(pp != nullptr, "pattern");
    hfreg::Eps level = hfreg::Eps::exact(hfreg::parse_rational(eps));
    hfreg::SearchResult result = hfreg::min_partition_order(
        g->g, parsed, pp == nullptr ? nullptr : &pp->pp, level,
        max_n > 0 ? max_n : 12);
    nlohmann::ordered_json j;
    j["notion"] = notion;
    j["eps"] = eps;
    j["minimal_order"] = result.minimal_order;
    j["partition"] = result.partition.clusters();
    j["partitions_examined"] = result.partitions_examined;
    set_out(out_json, j.dump(2));
    return HFREG_OK;
  });
}

int hfreg_verify(const char* suite, int trials, uint64_t seed,
                 char** out_json) {
  return guarded([&] {
    require(suite != nullptr, "suite");
    hfreg::SuiteReport report = hfreg::verify_suite(suite, trials, seed);
    set_out(out_json, hfreg::suite_report_to_json(report));
    return report.ok() ? HFREG_OK : HFREG_IRREGULAR;
  });
}

int hfreg_experiment(const char* config_json, char** out_json,
                     char** out_csv) {
  return guarded([&] {
    require(config_json != nullptr, "config_json");
    hfreg::ExperimentConfig config =
        hfreg::parse_experiment_config(config_json);
    hfreg::ExperimentResult result = hfreg::run_experiment(config);
    set_out(out_json, result.json_report);
    set_out(out_csv, result.csv_report);
    return HFREG_OK;
  });
}

int hfreg_tower(int n, char** out_decimal) {
  return guarded([&] {
    require(out_decimal != nullptr, "out_decimal");
    set_out(out_decimal, hfreg::tower(n).str());
    return HFREG_OK;
  });
}

}  // extern "C"
