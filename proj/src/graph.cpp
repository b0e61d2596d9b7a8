#include "cvc/graph.hpp"

#include <algorithm>
#include <string>

#include "cvc/errors.hpp"

namespace cvc {

Graph::Graph(int n) : n_(n), adj_(n), adj_sets_(n, VertexSet(n)) {
  if (n < 0) throw InputError("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range for n = " + std::to_string(n));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    g.edges_.emplace_back(u, v);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    g.adj_sets_[u].insert(v);
    g.adj_sets_[v].insert(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

bool is_connected(const Graph& g) { return is_connected_without(g, VertexSet(g.order())); }

bool is_connected_without(const Graph& g, const VertexSet& removed) {
  const int n = g.order();
  int start = -1;
  int remaining = 0;
  for (int v = 0; v < n; ++v) {
    if (removed.contains(v)) continue;
    if (start < 0) start = v;
    ++remaining;
  }
  if (remaining == 0) return true;

  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (seen[w] || removed.contains(w)) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == remaining;
}

VertexSet articulation_points(const Graph& g) {
  return articulation_points_without(g, VertexSet(g.order()));
}

VertexSet articulation_points_without(const Graph& g, const VertexSet& removed) {
  const int n = g.order();
  VertexSet cut(n);
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_edge(n, 0);
  std::vector<int> stack;
  int timer = 0;

  for (int root = 0; root < n; ++root) {
    if (removed.contains(root) || disc[root] >= 0) continue;
    int root_children = 0;
    disc[root] = low[root] = timer++;
    stack.push_back(root);
    while (!stack.empty()) {
      int u = stack.back();
      const auto& nb = g.neighbors(u);
      if (next_edge[u] < nb.size()) {
        int w = nb[next_edge[u]++];
        if (removed.contains(w)) continue;
        if (disc[w] < 0) {
          parent[w] = u;
          disc[w] = low[w] = timer++;
          if (u == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[u]) {
          low[u] = std::min(low[u], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      int p = parent[u];
      if (p >= 0) {
        low[p] = std::min(low[p], low[u]);
        if (p != root && low[u] >= disc[p]) cut.insert(p);
      }
    }
    if (root_children > 1) cut.insert(root);
  }
  return cut;
}

InducedSubgraph induced_delete(const Graph& g, const VertexSet& removed) {
  const int n = g.order();
  std::vector<int> relabel(n, -1);
  InducedSubgraph out;
  for (int v = 0; v < n; ++v) {
    if (removed.contains(v)) continue;
    relabel[v] = static_cast<int>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<Edge> kept;
  for (auto [u, v] : g.edges())
    if (relabel[u] >= 0 && relabel[v] >= 0) kept.emplace_back(relabel[u], relabel[v]);
  out.graph = Graph::from_edges(static_cast<int>(out.original.size()), kept);
  return out;
}

std::vector<Edge> dfs_tree(const Graph& g, int root) {
  const int n = g.order();
  if (root < 0 || root >= n) throw InputError("dfs_tree: root out of range");
  std::vector<Edge> tree;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> next_edge(n, 0);
  std::vector<int> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    const auto& nb = g.neighbors(u);
    if (next_edge[u] == nb.size()) {
      stack.pop_back();
      continue;
    }
    int w = nb[next_edge[u]++];
    if (seen[w]) continue;
    seen[w] = 1;
    tree.emplace_back(u, w);
    stack.push_back(w);
  }
  return tree;
}

}  // namespace cvc
