#pragma once

// Exhaustive reference computations over all 2^n subsets. Deliberately
// naive: they share nothing with the search code they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "cvc/graph.hpp"

namespace cvc::testing {

inline bool subset_is_stable(const Graph& g, std::uint32_t mask) {
  for (auto [u, v] : g.edges())
    if ((mask >> u & 1) && (mask >> v & 1)) return false;
  return true;
}

/// G minus `mask` connected (empty counts as connected).
inline bool remainder_connected(const Graph& g, std::uint32_t mask) {
  const int n = g.order();
  int start = -1, remaining = 0;
  for (int v = 0; v < n; ++v)
    if (!(mask >> v & 1)) {
      ++remaining;
      if (start < 0) start = v;
    }
  if (remaining == 0) return true;
  std::uint32_t seen = 1u << start;
  std::vector<int> todo{start};
  while (!todo.empty()) {
    int u = todo.back();
    todo.pop_back();
    for (int w : g.neighbors(u))
      if (!(mask >> w & 1) && !(seen >> w & 1)) {
        seen |= 1u << w;
        todo.push_back(w);
      }
  }
  return std::popcount(seen) == remaining;
}

inline std::uint32_t to_mask(const VertexSet& s) {
  std::uint32_t m = 0;
  s.for_each([&](int v) { m |= 1u << v; });
  return m;
}

/// alpha(G[U]) over all subsets of U.
inline int alpha_exhaustive(const Graph& g, const VertexSet& u) {
  const std::uint32_t umask = to_mask(u);
  int best = 0;
  for (std::uint32_t m = umask;; m = (m - 1) & umask) {
    if (std::popcount(m) > best && subset_is_stable(g, m)) best = std::popcount(m);
    if (m == 0) break;
  }
  return best;
}

/// Every stable set S with G \ S connected, as masks.
inline std::vector<std::uint32_t> feasible_stable_sets(const Graph& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << g.order()); ++m)
    if (subset_is_stable(g, m) && remainder_connected(g, m)) out.push_back(m);
  return out;
}

/// Minimum connected vertex cover size over all subsets.
inline int cvc_exhaustive(const Graph& g) {
  int best = g.order();
  for (auto m : feasible_stable_sets(g)) best = std::min(best, g.order() - std::popcount(m));
  return best;
}

/// Largest feasible stable set inside the node (S, U): S ⊆ S' ⊆ S ∪ U.
inline int best_feasible_within(const Graph& g, std::uint32_t s, std::uint32_t u) {
  int best = -1;
  for (std::uint32_t m = u;; m = (m - 1) & u) {
    const std::uint32_t cand = s | m;
    if (std::popcount(cand) > best && subset_is_stable(g, cand) && remainder_connected(g, cand))
      best = std::popcount(cand);
    if (m == 0) break;
  }
  return best;
}

/// Number of spanning trees via Kirchhoff: determinant of the Laplacian with
/// the last row and column removed, by fraction-free (Bareiss) elimination.
inline long long spanning_tree_count(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 1;
  const int k = n - 1;
  std::vector<std::vector<long long>> a(k, std::vector<long long>(k, 0));
  for (int v = 0; v < k; ++v) a[v][v] = g.degree(v);
  for (auto [u, v] : g.edges())
    if (u < k && v < k) a[u][v] = a[v][u] = -1;
  long long prev = 1;
  int sign = 1;
  for (int i = 0; i < k; ++i) {
    if (a[i][i] == 0) {
      int swap_row = -1;
      for (int r = i + 1; r < k; ++r)
        if (a[r][i] != 0) swap_row = r;
      if (swap_row < 0) return 0;
      std::swap(a[i], a[swap_row]);
      sign = -sign;
    }
    for (int r = i + 1; r < k; ++r)
      for (int c = i + 1; c < k; ++c) a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
    prev = a[i][i];
  }
  return sign * a[k - 1][k - 1];
}

}  // namespace cvc::testing
