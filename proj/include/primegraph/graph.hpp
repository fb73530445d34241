#pragma once

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primegraph/matrix.hpp"

namespace primegraph {

// Parameters of a complete bridge graph B(m,n): K_m and K_n joined by one
// edge. Normalization convention m >= n >= 1.
struct BridgeParams {
  int m = 1;
  int n = 1;

  BridgeParams(int m_, int n_);

  // membership condition for the minimally connected class:
  // m >= n > 1, or (2,1), or (1,1)
  bool admissible_minimally_connected() const {
    return (n > 1) || (m == 2 && n == 1) || (m == 1 && n == 1);
  }
};

// Role annotation preserved by the family constructors (also drives DOT
// labels). At most one per vertex.
struct VertexLabel {
  enum class Tag { BridgeVertex, CliqueMember, Apex, CycleVertex, DuplicateOf };
  Tag tag = Tag::CliqueMember;
  int duplicate_of = -1;  // only for Tag::DuplicateOf

  std::string str() const;
  bool operator==(const VertexLabel&) const = default;
};

// Simple undirected graph; immutable after construction, neighbor rows are
// bitsets. Vertex indices are 0-based.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // validates: indices in range, no loops; duplicate edges collapse
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const;
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  const boost::dynamic_bitset<>& neighbors(int v) const;
  std::vector<int> neighbor_list(int v) const;
  // all edges (u, v) with u < v, lexicographic
  std::vector<std::pair<int, int>> edges() const;
  // BFS distance; -1 when unreachable
  int distance(int u, int v) const;

  const std::optional<VertexLabel>& label(int v) const { return labels_[v]; }

  // adjacency only; labels are annotations and do not affect equality
  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  friend class GraphBuilder;
  void check_vertex(int v) const;
  std::vector<boost::dynamic_bitset<>> adj_;
  std::vector<std::optional<VertexLabel>> labels_;
};

// Mutable construction helper; every public graph operation funnels through
// this and returns a frozen Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  void add_edge(int u, int v);
  void set_label(int v, VertexLabel label);
  Graph build() &&;

 private:
  Graph g_;
};

// --- family constructors -------------------------------------------------

// K_k; rejects k < 1
Graph complete_graph(int k);

// B(m,n): vertices 0..m-1 form K_m, m..m+n-1 form K_n, bridge edge (m-1, m).
// This vertex order makes the adjacency matrix the block form with the lone
// off-block 1 in the bottom-left corner of the upper-right block.
Graph bridge_graph(const BridgeParams& p);

// S(m,n): B(m,n) plus apex vertex m+n adjacent to everything except the two
// bridge vertices; requires m+n >= 3 so the apex has a neighbor
Graph suspension_graph(const BridgeParams& p);

// 5-cycle 0-1-2-3-4-0
Graph cycle5();

// new vertex u = order() with edge u-v and u-x exactly when x-v is an edge
Graph duplicate_vertex(const Graph& g, int v);

// R~_n: cycle5() with vertex 0 duplicated n times; n+5 vertices
Graph reseminant_tilde(int n);

Graph complement(const Graph& g);

// throws if the edge is absent
Graph remove_edge(const Graph& g, int u, int v);

IntMatrix adjacency_matrix(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace primegraph
