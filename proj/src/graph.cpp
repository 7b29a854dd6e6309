#include "graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hfreg {

KPartiteGraph::KPartiteGraph(std::vector<int> class_sizes,
                             const std::vector<std::pair<int, int>>& edges)
    : class_sizes_(std::move(class_sizes)) {
  if (class_sizes_.empty())
    throw invalid_argument_error("graph needs at least one class");
  class_begin_.push_back(0);
  for (int s : class_sizes_) {
    if (s < 1) throw invalid_argument_error("class sizes must be positive");
    class_begin_.push_back(class_begin_.back() + s);
  }
  n_ = class_begin_.back();
  class_of_.resize(n_);
  for (int i = 0; i < k(); ++i)
    for (int v = class_begin_[i]; v < class_begin_[i + 1]; ++v) class_of_[v] = i;
  adj_.assign(n_, Bitset(n_));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw invalid_argument_error("unknown vertex in edge (" +
                                   std::to_string(u) + "," + std::to_string(v) + ")");
    if (class_of_[u] == class_of_[v])
      throw invalid_argument_error("intra-class edge (" + std::to_string(u) +
                                   "," + std::to_string(v) + ")");
    if (adj_[u].test(v))
      throw invalid_argument_error("duplicate edge (" + std::to_string(u) + "," +
                                   std::to_string(v) + ")");
    adj_[u].set(v);
    adj_[v].set(u);
    ++edge_count_;
  }
}

std::vector<int> KPartiteGraph::class_vertices(int i) const {
  std::vector<int> out;
  out.reserve(class_sizes_[i]);
  for (int v = class_begin_[i]; v < class_begin_[i + 1]; ++v) out.push_back(v);
  return out;
}

std::vector<std::pair<int, int>> KPartiteGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (size_t v = adj_[u].find_first(); v != Bitset::npos;
         v = adj_[u].find_next(v))
      if (static_cast<size_t>(u) < v) out.emplace_back(u, static_cast<int>(v));
  return out;
}

bool KPartiteGraph::operator==(const KPartiteGraph& other) const {
  return class_sizes_ == other.class_sizes_ && adj_ == other.adj_;
}

BipartiteGraph::BipartiteGraph(int n1, int n2,
                               const std::vector<std::pair<int, int>>& edges)
    : n1_(n1), n2_(n2), rows_(n1, Bitset(n2)) {
  if (n1 < 1 || n2 < 1)
    throw invalid_argument_error("bipartite sides must be nonempty");
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n1 || b < 0 || b >= n2)
      throw invalid_argument_error("bipartite edge endpoint out of range");
    if (rows_[a].test(b)) throw invalid_argument_error("duplicate bipartite edge");
    rows_[a].set(b);
    ++edge_count_;
  }
}

BipartiteGraph::BipartiteGraph(const KPartiteGraph& g)
    : n1_(0), n2_(0) {
  if (g.k() != 2)
    throw invalid_argument_error("expected a bipartite (k=2) graph");
  n1_ = g.class_size(0);
  n2_ = g.class_size(1);
  rows_.assign(n1_, Bitset(n2_));
  for (int a = 0; a < n1_; ++a)
    for (int b = 0; b < n2_; ++b)
      if (g.has_edge(a, n1_ + b)) {
        rows_[a].set(b);
        ++edge_count_;
      }
}

Rational BipartiteGraph::density() const {
  return Rational(Int(edge_count_), Int(n1_) * n2_);
}

size_t BipartiteGraph::edges_between(const Bitset& s1, const Bitset& s2) const {
  size_t total = 0;
  for (size_t a = s1.find_first(); a != Bitset::npos; a = s1.find_next(a))
    total += (rows_[a] & s2).count();
  return total;
}

Rational BipartiteGraph::subgraph_density(const Bitset& s1,
                                          const Bitset& s2) const {
  size_t c1 = s1.count(), c2 = s2.count();
  if (c1 == 0 || c2 == 0)
    throw invalid_argument_error("subgraph density over an empty side");
  return Rational(Int(edges_between(s1, s2)), Int(c1) * c2);
}

KPartiteGraph BipartiteGraph::as_kpartite() const {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n1_; ++a)
    for (size_t b = rows_[a].find_first(); b != Bitset::npos;
         b = rows_[a].find_next(b))
      edges.emplace_back(a, n1_ + static_cast<int>(b));
  return KPartiteGraph({n1_, n2_}, edges);
}

VertexPartition::VertexPartition(std::vector<std::vector<int>> clusters)
    : clusters_(std::move(clusters)) {
  if (clusters_.empty()) throw invalid_argument_error("partition needs >= 1 cluster");
  for (auto& c : clusters_) {
    if (c.empty()) throw invalid_argument_error("empty cluster in partition");
    std::sort(c.begin(), c.end());
    for (int v : c) ground_.push_back(v);
  }
  std::sort(ground_.begin(), ground_.end());
  if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end())
    throw invalid_argument_error("partition clusters are not disjoint");
}

VertexPartition VertexPartition::singletons(const std::vector<int>& ground) {
  std::vector<std::vector<int>> clusters;
  for (int v : ground) clusters.push_back({v});
  return VertexPartition(std::move(clusters));
}

VertexPartition VertexPartition::trivial(const std::vector<int>& ground) {
  return VertexPartition({ground});
}

bool VertexPartition::covers_range(int n) const {
  if (static_cast<int>(ground_.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    if (ground_[i] != i) return false;
  return true;
}

TupleView full_view(const KPartiteGraph& g) {
  TupleView view{&g, {}};
  for (int i = 0; i < g.k(); ++i) view.slots.push_back(g.class_vertices(i));
  return view;
}

TupleView make_tuple_view(const KPartiteGraph& g,
                          const std::vector<std::vector<int>>& clusters) {
  if (static_cast<int>(clusters.size()) != g.k())
    throw invalid_argument_error("tuple view needs one cluster per class");
  TupleView view{&g, {}};
  for (int i = 0; i < g.k(); ++i) {
    std::vector<int> slot;
    for (int v : clusters[i]) {
      if (v < 0 || v >= g.n())
        throw invalid_argument_error("tuple-view cluster contains unknown vertex");
      if (g.class_of(v) == i) slot.push_back(v);
    }
    std::sort(slot.begin(), slot.end());
    view.slots.push_back(std::move(slot));
  }
  return view;
}

KPartiteGraph induced_subgraph(const KPartiteGraph& g,
                               const std::vector<std::vector<int>>& subsets) {
  if (static_cast<int>(subsets.size()) != g.k())
    throw invalid_argument_error("need one vertex subset per class");
  std::vector<int> sizes;
  std::vector<int> old_ids;
  for (int i = 0; i < g.k(); ++i) {
    if (subsets[i].empty())
      throw invalid_argument_error("induced subgraph with empty class " +
                                   std::to_string(i + 1));
    std::vector<int> sorted = subsets[i];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw invalid_argument_error("repeated vertex in induced subset");
    for (int v : sorted) {
      if (v < 0 || v >= g.n() || g.class_of(v) != i)
        throw invalid_argument_error("subset " + std::to_string(i + 1) +
                                     " is not within class " + std::to_string(i + 1));
      old_ids.push_back(v);
    }
    sizes.push_back(static_cast<int>(sorted.size()));
  }
  std::vector<std::pair<int, int>> edges;
  for (size_t a = 0; a < old_ids.size(); ++a)
    for (size_t b = a + 1; b < old_ids.size(); ++b)
      if (g.has_edge(old_ids[a], old_ids[b]))
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return KPartiteGraph(std::move(sizes), edges);
}

KPartiteGraph add_isolated_vertices(const KPartiteGraph& g,
                                    const std::vector<int>& extra) {
  if (static_cast<int>(extra.size()) != g.k())
    throw invalid_argument_error("need one pad count per class");
  std::vector<int> sizes = g.class_sizes();
  std::vector<int> remap(g.n());
  int offset = 0;
  for (int i = 0; i < g.k(); ++i) {
    if (extra[i] < 0) throw invalid_argument_error("negative pad count");
    for (int v = g.class_begin(i); v < g.class_begin(i) + g.class_size(i); ++v)
      remap[v] = v + offset;
    sizes[i] += extra[i];
    offset += extra[i];
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edge_list()) edges.emplace_back(remap[u], remap[v]);
  return KPartiteGraph(std::move(sizes), edges);
}

// --- file formats -----------------------------------------------------------

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

[[noreturn]] void fail_at(int line_no, const std::string& msg) {
  throw parse_error("line " + std::to_string(line_no) + ": " + msg);
}

// Extracts "(u,v)" pairs from a line fragment; tolerates missing whitespace
// between pairs.
std::vector<std::pair<int, int>> scan_pairs(const std::string& text, int line_no) {
  std::vector<std::pair<int, int>> pairs;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') fail_at(line_no, "expected '(' in edge list");
    size_t close = text.find(')', i);
    if (close == std::string::npos) fail_at(line_no, "unterminated edge pair");
    std::string body = text.substr(i + 1, close - i - 1);
    auto comma = body.find(',');
    if (comma == std::string::npos) fail_at(line_no, "edge pair without comma");
    try {
      pairs.emplace_back(std::stoi(body.substr(0, comma)),
                         std::stoi(body.substr(comma + 1)));
    } catch (const std::exception&) {
      fail_at(line_no, "malformed edge pair (" + body + ")");
    }
    i = close + 1;
  }
  return pairs;
}

}  // namespace

KPartiteGraph parse_graph(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty() || lines[0].rfind("k=", 0) != 0)
    fail_at(1, "malformed header, expected `k=<int>`");
  int k;
  try {
    k = std::stoi(lines[0].substr(2));
  } catch (const std::exception&) {
    fail_at(1, "malformed class count");
  }
  if (k < 1) fail_at(1, "class count must be >= 1");
  if (lines.size() < 2 || lines[1].rfind("classes", 0) != 0)
    fail_at(2, "malformed header, expected `classes <sizes>`");
  std::vector<int> sizes;
  {
    std::istringstream is(lines[1].substr(7));
    int s;
    while (is >> s) sizes.push_back(s);
    if (static_cast<int>(sizes.size()) != k)
      fail_at(2, "expected " + std::to_string(k) + " class sizes");
  }
  std::vector<std::pair<int, int>> edges;
  bool saw_edges_keyword = false;
  for (size_t li = 2; li < lines.size(); ++li) {
    std::string line = lines[li];
    int line_no = static_cast<int>(li) + 1;
    size_t start = 0;
    while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
      ++start;
    line = line.substr(start);
    if (line.empty()) continue;
    if (line.rfind("edges", 0) == 0) {
      saw_edges_keyword = true;
      line = line.substr(5);
    } else if (!saw_edges_keyword) {
      fail_at(line_no, "expected `edges` section");
    }
    for (auto e : scan_pairs(line, line_no)) edges.push_back(e);
  }
  if (!saw_edges_keyword && !edges.empty())
    fail_at(3, "edge list without `edges` keyword");
  try {
    return KPartiteGraph(std::move(sizes), edges);
  } catch (const Error& err) {
    throw parse_error(err.what());
  }
}

std::string serialize_graph(const KPartiteGraph& g) {
  std::ostringstream os;
  os << "k=" << g.k() << '\n' << "classes";
  for (int s : g.class_sizes()) os << ' ' << s;
  os << '\n' << "edges";
  for (auto [u, v] : g.edge_list()) os << " (" << u << ',' << v << ')';
  os << '\n';
  return os.str();
}

VertexPartition parse_partition(const std::string& text) {
  std::vector<std::vector<int>> clusters;
  int line_no = 0;
  for (const auto& line : split_lines(text)) {
    ++line_no;
    std::istringstream is(line);
    std::vector<int> cluster;
    std::string tok;
    while (is >> tok) {
      try {
        cluster.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        fail_at(line_no, "malformed vertex id `" + tok + "`");
      }
    }
    if (!cluster.empty()) clusters.push_back(std::move(cluster));
  }
  try {
    return VertexPartition(std::move(clusters));
  } catch (const Error& err) {
    throw parse_error(err.what());
  }
}

std::string serialize_partition(const VertexPartition& p) {
  std::ostringstream os;
  for (const auto& cluster : p.clusters()) {
    for (size_t i = 0; i < cluster.size(); ++i)
      os << (i ? " " : "") << cluster[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace hfreg
