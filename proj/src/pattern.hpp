#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hfreg {

constexpr int kMaxPatternVertices = 12;

/// A simple graph on vertex set {0,...,k-1}.  Edges are stored sorted with
/// min endpoint first; adjacency is mirrored in per-vertex bitmasks.
class Pattern {
 public:
  Pattern() = default;
  Pattern(int k, std::vector<std::pair<int, int>> edges);

  static Pattern complete(int k);
  static Pattern empty(int k);
  /// The 2-edge path on [3] with center `center`.
  static Pattern two_edge_path(int center = 2);

  int k() const { return k_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  size_t edge_count() const { return edges_.size(); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  uint32_t neighbors_mask(int v) const { return adj_[v]; }

  bool is_subgraph_of(const Pattern& other) const;
  Pattern without_edge(std::pair<int, int> e) const;
  /// Vertex i of the result is perm[i] of *this... i.e. relabels vertex v to
  /// position inverse; see .cpp for the exact convention.
  Pattern relabeled(const std::vector<int>& perm) const;

  bool is_connected() const;

  bool operator==(const Pattern& other) const {
    return k_ == other.k_ && edges_ == other.edges_;
  }

 private:
  int k_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<uint32_t> adj_;
};

/// The fixed triple (H, F, e): F a strict subgraph of H on the same k
/// vertices, e an edge of H outside F.  Construction canonically relabels so
/// that e = {0,1} (classes 1 and 2 in file notation).
class PatternPair {
 public:
  PatternPair(int k, Pattern h, Pattern f, std::pair<int, int> e);

  static PatternPair edge_density_pair();      // (K_2, empty, e={1,2})
  static PatternPair clustering_pair();        // (K_3, P_2, e={1,2})

  int k() const { return k_; }
  const Pattern& h() const { return h_; }
  const Pattern& f() const { return f_; }
  /// Always {0,1} after canonical relabeling.
  std::pair<int, int> e() const { return {0, 1}; }
  /// H with e removed.
  const Pattern& h_minus() const { return h_minus_; }

 private:
  int k_;
  Pattern h_;
  Pattern f_;
  Pattern h_minus_;
};

/// Pattern-pair file: `k=<int>; H=<pairs>; F=<pairs>; e=(a,b)` with 1-based
/// vertices, e.g. `k=3; H=(1,2)(1,3)(2,3); F=(1,3)(2,3); e=(1,2)`.
PatternPair parse_pattern_pair(const std::string& text);
std::string serialize_pattern_pair(const PatternPair& pp);

}  // namespace hfreg
