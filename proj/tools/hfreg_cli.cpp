// Command-line front end for the hfreg shared library.  Talks to the core
// exclusively through the C API in hfreg.h; exit codes mirror the library's
// status codes (0 regular/success, 1 irregular, 2 undefined, 3+ errors).
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hfreg.h"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(HFREG_ERR_IO);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(HFREG_ERR_IO);
  }
  out << content;
}

struct StringOut {
  char* value = nullptr;
  ~StringOut() { hfreg_free_string(value); }
  std::string str() const { return value == nullptr ? std::string() : value; }
};

int finish(int status) {
  if (status >= HFREG_ERR_PARSE) {
    std::cerr << "error: " << hfreg_last_error() << "\n";
  }
  return status;
}

struct Handles {
  hfreg_graph* graph = nullptr;
  hfreg_pattern* pattern = nullptr;
  hfreg_partition* partition = nullptr;
  ~Handles() {
    hfreg_graph_free(graph);
    hfreg_pattern_free(pattern);
    hfreg_partition_free(partition);
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    write_file(out_path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(H,F)-regularity toolkit"};
  app.require_subcommand(1);

  std::string graph_path, pattern_path, partition_path, g0_path, out_path;
  std::string notion = "bipartite", eps, mode = "exact", which = "H";
  std::string kind, p_rational, config_path, suite;
  std::vector<int> sizes, extra;
  uint64_t seed = 0, samples = 0;
  int workers = 1, trials = 20, max_n = 12, tower_n = 0;
  bool trusted = false;

  auto* count = app.add_subcommand("count", "Count pattern copies");
  count->add_option("--pattern", pattern_path)->required();
  count->add_option("--graph", graph_path)->required();
  count->add_option("--which", which)->check(CLI::IsMember({"H", "F"}));
  count->add_option("--workers", workers)->check(CLI::PositiveNumber);

  auto* coeff = app.add_subcommand("coeff", "(H,F)-coefficient of a graph");
  coeff->add_option("--pattern", pattern_path)->required();
  coeff->add_option("--graph", graph_path)->required();

  auto* density = app.add_subcommand("density", "Bipartite edge density");
  density->add_option("--graph", graph_path)->required();

  auto* generate = app.add_subcommand("generate", "Deterministic generators");
  generate->add_option("--kind", kind)->required();
  generate->add_option("--sizes", sizes)->required()->expected(-1);
  generate->add_option("--p", p_rational);
  generate->add_option("--seed", seed);
  generate->add_option("--out", out_path);

  auto* blowup = app.add_subcommand("blowup", "Blowup of the pattern H");
  blowup->add_option("--pattern", pattern_path)->required();
  blowup->add_option("--sizes", sizes)->required()->expected(-1);
  blowup->add_option("--out", out_path);

  auto* semiblowup =
      app.add_subcommand("semiblowup", "Semi-blowup of H along e with G0");
  semiblowup->add_option("--pattern", pattern_path)->required();
  semiblowup->add_option("--g0", g0_path)->required();
  semiblowup->add_option("--extra", extra)->expected(-1);
  semiblowup->add_option("--out", out_path);

  auto* add_isolated =
      app.add_subcommand("add-isolated", "Pad classes with isolated vertices");
  add_isolated->add_option("--graph", graph_path)->required();
  add_isolated->add_option("--extra", extra)->required()->expected(-1);
  add_isolated->add_option("--out", out_path);

  auto* check = app.add_subcommand("check", "Regularity check with witness");
  check->add_option("--graph", graph_path)->required();
  check->add_option("--notion", notion)
      ->check(CLI::IsMember(
          {"bipartite", "hf", "bipartite-partition", "hf-partition"}));
  check->add_option("--eps", eps)->required();
  check->add_option("--pattern", pattern_path);
  check->add_option("--partition", partition_path);
  check->add_option("--mode", mode)->check(CLI::IsMember({"exact", "sampled"}));
  check->add_option("--seed", seed);
  check->add_option("--samples", samples);
  check->add_option("--workers", workers)->check(CLI::PositiveNumber);

  auto* refine =
      app.add_subcommand("refine", "Common refinement with {V_1, V_2}");
  refine->add_option("--partition", partition_path)->required();
  refine->add_option("--graph", graph_path)->required();
  refine->add_option("--out", out_path);

  auto* reduce = app.add_subcommand(
      "reduce", "Partition reduction: semi-blowup regularity to Szemerédi");
  reduce->add_option("--pattern", pattern_path)->required();
  reduce->add_option("--g0", g0_path)->required();
  reduce->add_option("--partition", partition_path)->required();
  reduce->add_option("--eps", eps)->required();
  reduce->add_flag("--trusted", trusted,
                   "Skip re-checking the input partition");

  auto* search =
      app.add_subcommand("search-min", "Exhaustive minimum partition order");
  search->add_option("--graph", graph_path)->required();
  search->add_option("--notion", notion)
      ->check(CLI::IsMember({"bipartite", "hf"}));
  search->add_option("--eps", eps)->required();
  search->add_option("--pattern", pattern_path);
  search->add_option("--max-n", max_n)->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Seeded property suites");
  verify->add_option("--suite", suite)->required();
  verify->add_option("--trials", trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed);

  auto* experiment =
      app.add_subcommand("experiment", "Config-driven experiment run");
  experiment->add_option("--config", config_path)->required();

  auto* tower = app.add_subcommand("tower", "Tower function twr(n)");
  tower->add_option("n", tower_n)->required();

  CLI11_PARSE(app, argc, argv);

  Handles h;
  int rc = HFREG_OK;
  if (!pattern_path.empty()) {
    rc = hfreg_pattern_parse(read_file(pattern_path).c_str(), &h.pattern);
    if (rc != HFREG_OK) return finish(rc);
  }
  if (!graph_path.empty()) {
    rc = hfreg_graph_parse(read_file(graph_path).c_str(), &h.graph);
    if (rc != HFREG_OK) return finish(rc);
  }
  if (!partition_path.empty()) {
    rc = hfreg_partition_parse(read_file(partition_path).c_str(),
                               &h.partition);
    if (rc != HFREG_OK) return finish(rc);
  }
  hfreg_graph* g0 = nullptr;
  if (!g0_path.empty()) {
    rc = hfreg_graph_parse(read_file(g0_path).c_str(), &g0);
    if (rc != HFREG_OK) return finish(rc);
  }
  std::unique_ptr<hfreg_graph, decltype(&hfreg_graph_free)> g0_guard(
      g0, hfreg_graph_free);

  StringOut out;
  if (count->parsed()) {
    rc = hfreg_count(h.pattern, which[0], h.graph, workers, &out.value);
    if (rc == HFREG_OK) std::cout << out.str() << "\n";
  } else if (coeff->parsed()) {
    rc = hfreg_coeff(h.pattern, h.graph, &out.value);
    if (rc <= HFREG_UNDEFINED) std::cout << out.str() << "\n";
  } else if (density->parsed()) {
    rc = hfreg_density(h.graph, &out.value);
    if (rc == HFREG_OK) std::cout << out.str() << "\n";
  } else if (generate->parsed()) {
    hfreg_graph* g = nullptr;
    rc = hfreg_generate(kind.c_str(), sizes.data(),
                        static_cast<int>(sizes.size()),
                        p_rational.empty() ? nullptr : p_rational.c_str(),
                        seed, &g);
    if (rc == HFREG_OK) {
      rc = hfreg_graph_serialize(g, &out.value);
      if (rc == HFREG_OK) emit(out.str(), out_path);
    }
    hfreg_graph_free(g);
  } else if (blowup->parsed()) {
    hfreg_graph* g = nullptr;
    rc = hfreg_blowup(h.pattern, sizes.data(), static_cast<int>(sizes.size()),
                      &g);
    if (rc == HFREG_OK) {
      rc = hfreg_graph_serialize(g, &out.value);
      if (rc == HFREG_OK) emit(out.str(), out_path);
    }
    hfreg_graph_free(g);
  } else if (semiblowup->parsed()) {
    hfreg_graph* g = nullptr;
    rc = hfreg_semiblowup(h.pattern, g0, extra.data(),
                          static_cast<int>(extra.size()), &g);
    if (rc == HFREG_OK) {
      rc = hfreg_graph_serialize(g, &out.value);
      if (rc == HFREG_OK) emit(out.str(), out_path);
    }
    hfreg_graph_free(g);
  } else if (add_isolated->parsed()) {
    hfreg_graph* g = nullptr;
    rc = hfreg_add_isolated(h.graph, extra.data(),
                            static_cast<int>(extra.size()), &g);
    if (rc == HFREG_OK) {
      rc = hfreg_graph_serialize(g, &out.value);
      if (rc == HFREG_OK) emit(out.str(), out_path);
    }
    hfreg_graph_free(g);
  } else if (check->parsed()) {
    rc = hfreg_check(h.graph, h.pattern, h.partition, notion.c_str(),
                     eps.c_str(), mode.c_str(), seed, samples, workers,
                     &out.value);
    if (rc <= HFREG_UNDEFINED) std::cout << out.str() << "\n";
  } else if (refine->parsed()) {
    rc = hfreg_refine(h.partition, h.graph, &out.value);
    if (rc == HFREG_OK) emit(out.str(), out_path);
  } else if (reduce->parsed()) {
    rc = hfreg_reduce(h.pattern, g0, h.partition, eps.c_str(),
                      trusted ? 1 : 0, &out.value);
    if (rc <= HFREG_UNDEFINED) std::cout << out.str() << "\n";
  } else if (search->parsed()) {
    rc = hfreg_search_min(h.graph, h.pattern, notion.c_str(), eps.c_str(),
                          max_n, &out.value);
    if (rc == HFREG_OK) std::cout << out.str() << "\n";
  } else if (verify->parsed()) {
    rc = hfreg_verify(suite.c_str(), trials, seed, &out.value);
    if (rc <= HFREG_UNDEFINED) std::cout << out.str() << "\n";
  } else if (experiment->parsed()) {
    StringOut csv;
    rc = hfreg_experiment(read_file(config_path).c_str(), &out.value,
                          &csv.value);
    if (rc == HFREG_OK) {
      std::cout << out.str();
      if (!out.str().empty() && out.str().back() != '\n') std::cout << "\n";
      std::cout << csv.str();
    }
  } else if (tower->parsed()) {
    rc = hfreg_tower(tower_n, &out.value);
    if (rc == HFREG_OK) std::cout << out.str() << "\n";
  }
  return finish(rc);
}
