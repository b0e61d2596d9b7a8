#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cvc/vertex_set.hpp"

namespace cvc {

/// Undirected edge, always stored with first < second.
using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built, so a
/// single instance can be shared by concurrent solver runs.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Builds a graph from an edge list. Pairs are unordered; duplicates
  /// collapse. Throws InputError on self-loops or out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const VertexSet& neighbor_set(int v) const { return adj_sets_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const { return adj_sets_[u].contains(v); }

  /// Lexicographically sorted, each edge once with first < second.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  VertexSet all_vertices() const { return VertexSet::full(n_); }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<VertexSet> adj_sets_;
};

/// G[V \ removed] with the mapping from new to original labels.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;  // new label -> original label
};

/// True iff a traversal from vertex 0 reaches every vertex. Requires n >= 1.
bool is_connected(const Graph& g);

/// True iff G \ removed is connected. The empty graph counts as connected.
bool is_connected_without(const Graph& g, const VertexSet& removed);

/// Cut-vertices of g, by one low-link DFS per component.
VertexSet articulation_points(const Graph& g);

/// Cut-vertices of G \ removed, computed in place without building the
/// induced graph. Members of `removed` are never reported.
VertexSet articulation_points_without(const Graph& g, const VertexSet& removed);

InducedSubgraph induced_delete(const Graph& g, const VertexSet& removed);

/// Depth-first spanning tree from `root`, exploring neighbors in increasing
/// label order. Edges are (parent, child) in discovery order.
std::vector<Edge> dfs_tree(const Graph& g, int root);

}  // namespace cvc
