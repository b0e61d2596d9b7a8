#pragma once

#include <optional>
#include <vector>

#include "cvc/graph.hpp"

namespace cvc {

/// Greedy proper coloring of the complement of G[U]. Every color class is a
/// clique of G, so a stable set of G[U] meets each class at most once and
/// color_count >= alpha(G[U]).
struct ColoringBound {
  int color_count = 0;
  std::vector<int> coloring;  // per vertex of G; -1 outside U
};

/// Largest-first greedy coloring of the complement of G[U]: vertices are
/// scanned by decreasing complement degree (ties by smaller label) and get
/// the smallest color whose class is a clique in G together with them.
ColoringBound greedy_color_bound(const Graph& g, const VertexSet& u);

/// Number of distinct colors of `coloring` present on `u`. Valid as a stable
/// set bound whenever the coloring was computed for a superset of `u`.
int colors_present(const std::vector<int>& coloring, const VertexSet& u);

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

/// BFS two-coloring. Each component's smallest vertex goes to `left`.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// alpha(G[U]) = |U| - nu(G[U]) by König's theorem, with the maximum matching
/// found by Hopcroft-Karp. Throws ContractError if G[U] is not bipartite.
int bipartite_stable_bound(const Graph& g, const VertexSet& u);

/// Same, reusing a known bipartition of G (restricted to U).
int bipartite_stable_bound(const Graph& g, const VertexSet& u, const Bipartition& sides);

/// Maximum matching size of the bipartite graph G[U] between `sides`.
int hopcroft_karp(const Graph& g, const VertexSet& u, const Bipartition& sides);

}  // namespace cvc
