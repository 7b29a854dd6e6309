#pragma once

#include <boost/dynamic_bitset.hpp>

#include <string>
#include <vector>

#include "pattern.hpp"
#include "rational.hpp"

namespace hfreg {

using Bitset = boost::dynamic_bitset<>;

/// A k-partite graph on dense vertex ids 0..n-1.  Class i occupies the
/// contiguous id range [class_begin(i), class_begin(i+1)); all edges are
/// cross-class.  Immutable after construction.
class KPartiteGraph {
 public:
  KPartiteGraph(std::vector<int> class_sizes,
                const std::vector<std::pair<int, int>>& edges);

  int k() const { return static_cast<int>(class_sizes_.size()); }
  int n() const { return n_; }
  int class_size(int i) const { return class_sizes_[i]; }
  const std::vector<int>& class_sizes() const { return class_sizes_; }
  int class_begin(int i) const { return class_begin_[i]; }
  int class_of(int v) const { return class_of_[v]; }
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbors(int v) const { return adj_[v]; }
  size_t edge_count() const { return edge_count_; }

  /// Vertices of class i, in id order.
  std::vector<int> class_vertices(int i) const;

  /// Sorted (min-first) edge list, lexicographic.
  std::vector<std::pair<int, int>> edge_list() const;

  bool operator==(const KPartiteGraph& other) const;

 private:
  std::vector<int> class_sizes_;
  std::vector<int> class_begin_;  // size k+1
  std::vector<int> class_of_;
  std::vector<Bitset> adj_;
  int n_ = 0;
  size_t edge_count_ = 0;
};

/// Bipartite graph: the k = 2 case, with side sizes (n1, n2).  Side-1
/// vertices are ids 0..n1-1, side-2 vertices ids n1..n1+n2-1.
class BipartiteGraph {
 public:
  BipartiteGraph(int n1, int n2, const std::vector<std::pair<int, int>>& edges);
  explicit BipartiteGraph(const KPartiteGraph& g);

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  /// Edge between side-1 vertex a (0-based within side) and side-2 vertex b.
  bool has_edge(int a, int b) const { return rows_[a].test(b); }
  const Bitset& row(int a) const { return rows_[a]; }
  size_t edge_count() const { return edge_count_; }

  Rational density() const;

  /// Density of the induced subgraph on side subsets given as bitmasks over
  /// side-local indices; both must be nonempty.
  Rational subgraph_density(const Bitset& s1, const Bitset& s2) const;
  size_t edges_between(const Bitset& s1, const Bitset& s2) const;

  KPartiteGraph as_kpartite() const;

 private:
  int n1_, n2_;
  std::vector<Bitset> rows_;  // n1 rows over side-2 indices
  size_t edge_count_ = 0;
};

/// Disjoint nonempty clusters covering a ground set exactly.  Clusters keep
/// their given order; vertices within a cluster are sorted.
class VertexPartition {
 public:
  explicit VertexPartition(std::vector<std::vector<int>> clusters);

  static VertexPartition singletons(const std::vector<int>& ground);
  static VertexPartition trivial(const std::vector<int>& ground);

  int order() const { return static_cast<int>(clusters_.size()); }
  const std::vector<std::vector<int>>& clusters() const { return clusters_; }
  const std::vector<int>& cluster(int i) const { return clusters_[i]; }
  const std::vector<int>& ground() const { return ground_; }
  size_t ground_size() const { return ground_.size(); }

  /// True iff the ground set is exactly {0,...,n-1}.
  bool covers_range(int n) const;

  bool operator==(const VertexPartition& other) const {
    return clusters_ == other.clusters_;
  }

 private:
  std::vector<std::vector<int>> clusters_;
  std::vector<int> ground_;
};

/// Transversal view used by partition-level counting: slot i holds
/// X_i ∩ V_i of the ambient graph, so slots may be empty.  Its transversal
/// tuples are (v_1..v_k) with v_i in slot i.
struct TupleView {
  const KPartiteGraph* graph;
  std::vector<std::vector<int>> slots;  // slot i ⊆ class i, sorted
};

/// View of a whole graph (slot i = class i).
TupleView full_view(const KPartiteGraph& g);

/// Tuple view for clusters X_1..X_k (possibly repeating): slot i = X_i ∩ V_i.
TupleView make_tuple_view(const KPartiteGraph& g,
                          const std::vector<std::vector<int>>& clusters);

/// G[U_1,...,U_k]: a standalone k-partite graph.  Each U_i must be a
/// nonempty subset of class i.
KPartiteGraph induced_subgraph(const KPartiteGraph& g,
                               const std::vector<std::vector<int>>& subsets);

KPartiteGraph add_isolated_vertices(const KPartiteGraph& g,
                                    const std::vector<int>& extra);

// --- file formats -----------------------------------------------------------

/// Graph file: `k=<int>` / `classes s_1 ... s_k` / `edges (u,v) (u,v) ...`.
KPartiteGraph parse_graph(const std::string& text);
std::string serialize_graph(const KPartiteGraph& g);

/// Partition file: one line per cluster, whitespace-separated vertex ids.
VertexPartition parse_partition(const std::string& text);
std::string serialize_partition(const VertexPartition& p);

}  // namespace hfreg
