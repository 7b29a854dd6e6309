#include "pattern.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hfreg {

namespace {

std::vector<std::pair<int, int>> normalize_edges(
    int k, std::vector<std::pair<int, int>> edges) {
  for (auto& [u, v] : edges) {
    if (u == v) throw invalid_argument_error("pattern has a self-loop");
    if (u < 0 || v < 0 || u >= k || v >= k)
      throw invalid_argument_error("pattern edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) throw invalid_argument_error("duplicate pattern edge");
  return edges;
}

}  // namespace

Pattern::Pattern(int k, std::vector<std::pair<int, int>> edges)
    : k_(k), edges_(normalize_edges(k, std::move(edges))), adj_(k, 0) {
  if (k < 1 || k > kMaxPatternVertices)
    throw invalid_argument_error("pattern vertex count out of range");
  for (auto [u, v] : edges_) {
    adj_[u] |= 1u << v;
    adj_[v] |= 1u << u;
  }
}

Pattern Pattern::complete(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  return Pattern(k, std::move(edges));
}

Pattern Pattern::empty(int k) { return Pattern(k, {}); }

Pattern Pattern::two_edge_path(int center) {
  std::vector<int> leaves;
  for (int v = 0; v < 3; ++v)
    if (v != center) leaves.push_back(v);
  return Pattern(3, {{leaves[0], center}, {leaves[1], center}});
}

bool Pattern::is_subgraph_of(const Pattern& other) const {
  if (k_ != other.k_) return false;
  return std::all_of(edges_.begin(), edges_.end(), [&](const auto& e) {
    return other.has_edge(e.first, e.second);
  });
}

Pattern Pattern::without_edge(std::pair<int, int> e) const {
  if (e.first > e.second) std::swap(e.first, e.second);
  std::vector<std::pair<int, int>> edges;
  for (auto& ed : edges_)
    if (ed != e) edges.push_back(ed);
  if (edges.size() == edges_.size())
    throw invalid_argument_error("edge to remove is not in the pattern");
  return Pattern(k_, std::move(edges));
}

Pattern Pattern::relabeled(const std::vector<int>& perm) const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edges_.size());
  for (auto [u, v] : edges_) edges.emplace_back(perm[u], perm[v]);
  return Pattern(k_, std::move(edges));
}

bool Pattern::is_connected() const {
  if (k_ == 0) return true;
  uint32_t seen = 1;
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    uint32_t fresh = adj_[v] & ~seen;
    while (fresh) {
      int u = std::countr_zero(fresh);
      fresh &= fresh - 1;
      seen |= 1u << u;
      stack.push_back(u);
    }
  }
  return seen == (k_ >= 32 ? ~0u : ((1u << k_) - 1));
}

PatternPair::PatternPair(int k, Pattern h, Pattern f, std::pair<int, int> e)
    : k_(k), h_(std::move(h)), f_(std::move(f)), h_minus_(1, {}) {
  if (k < 2) throw invalid_argument_error("pattern pair requires k >= 2");
  if (h_.k() != k || f_.k() != k)
    throw invalid_argument_error("H and F must live on the same k vertices");
  if (!f_.is_subgraph_of(h_))
    throw invalid_argument_error("F must be a subgraph of H");
  if (f_.edge_count() >= h_.edge_count())
    throw invalid_argument_error("F must be a strict subgraph of H");
  if (e.first > e.second) std::swap(e.first, e.second);
  if (e.first < 0 || e.second >= k || e.first == e.second)
    throw invalid_argument_error("e endpoints out of range");
  if (!h_.has_edge(e.first, e.second))
    throw invalid_argument_error("e must be an edge of H");
  if (f_.has_edge(e.first, e.second))
    throw invalid_argument_error("e must not be an edge of F");

  // Canonical relabeling: e's endpoints become vertices 0 and 1.
  if (e != std::make_pair(0, 1)) {
    std::vector<int> perm(k);
    std::vector<int> rest;
    for (int v = 0; v < k; ++v)
      if (v != e.first && v != e.second) rest.push_back(v);
    perm[e.first] = 0;
    perm[e.second] = 1;
    for (size_t i = 0; i < rest.size(); ++i) perm[rest[i]] = static_cast<int>(i) + 2;
    h_ = h_.relabeled(perm);
    f_ = f_.relabeled(perm);
  }
  h_minus_ = h_.without_edge({0, 1});
}

PatternPair PatternPair::edge_density_pair() {
  return PatternPair(2, Pattern::complete(2), Pattern::empty(2), {0, 1});
}

PatternPair PatternPair::clustering_pair() {
  return PatternPair(3, Pattern::complete(3), Pattern::two_edge_path(), {0, 1});
}

namespace {

// Parses "(a,b)(c,d) ..." into pairs; 1-based input becomes 0-based.
std::vector<std::pair<int, int>> parse_pair_list(const std::string& text,
                                                 const std::string& what) {
  std::vector<std::pair<int, int>> pairs;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw parse_error("expected '(' in " + what + " list near: " + text.substr(i));
    size_t close = text.find(')', i);
    if (close == std::string::npos)
      throw parse_error("unterminated pair in " + what + " list");
    std::string body = text.substr(i + 1, close - i - 1);
    auto comma = body.find(',');
    if (comma == std::string::npos)
      throw parse_error("pair without comma in " + what + " list: (" + body + ")");
    try {
      int a = std::stoi(body.substr(0, comma));
      int b = std::stoi(body.substr(comma + 1));
      pairs.emplace_back(a - 1, b - 1);
    } catch (const std::exception&) {
      throw parse_error("malformed pair in " + what + " list: (" + body + ")");
    }
    i = close + 1;
    skip_ws();
  }
  return pairs;
}

std::string field_after(const std::string& text, const std::string& key) {
  auto pos = text.find(key);
  if (pos == std::string::npos) throw parse_error("missing '" + key + "' field");
  pos += key.size();
  auto end = text.find(';', pos);
  if (end == std::string::npos) end = text.size();
  return text.substr(pos, end - pos);
}

}  // namespace

PatternPair parse_pattern_pair(const std::string& text) {
  int k;
  try {
    k = std::stoi(field_after(text, "k="));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw parse_error("malformed k field in pattern file");
  }
  auto h_pairs = parse_pair_list(field_after(text, "H="), "H");
  auto f_pairs = parse_pair_list(field_after(text, "F="), "F");
  auto e_pairs = parse_pair_list(field_after(text, "e="), "e");
  if (e_pairs.size() != 1) throw parse_error("e must be a single pair");
  try {
    return PatternPair(k, Pattern(k, std::move(h_pairs)),
                       Pattern(k, std::move(f_pairs)), e_pairs[0]);
  } catch (const Error& err) {
    throw parse_error(std::string("invalid pattern pair: ") + err.what());
  }
}

std::string serialize_pattern_pair(const PatternPair& pp) {
  auto list = [](const std::vector<std::pair<int, int>>& edges) {
    std::ostringstream os;
    for (auto [u, v] : edges) os << '(' << u + 1 << ',' << v + 1 << ')';
    return os.str();
  };
  std::ostringstream os;
  os << "k=" << pp.k() << "; H=" << list(pp.h().edges())
     << "; F=" << list(pp.f().edges()) << "; e=(1,2)";
  return os.str();
}

}  // namespace hfreg
