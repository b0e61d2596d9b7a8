#include "cvc/bounds.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "cvc/errors.hpp"

namespace cvc {

ColoringBound greedy_color_bound(const Graph& g, const VertexSet& u) {
  ColoringBound out;
  out.coloring.assign(g.order(), -1);
  auto members = u.to_vector();
  if (members.empty()) return out;

  // Complement degree inside U is |U| - 1 - deg_{G[U]}(v); sorting by it
  // decreasingly is sorting by G[U]-degree increasingly.
  std::vector<int> inner_degree(g.order(), 0);
  for (int v : members) inner_degree[v] = g.neighbor_set(v).intersection_size(u);
  std::stable_sort(members.begin(), members.end(),
                   [&](int a, int b) { return inner_degree[a] < inner_degree[b]; });

  std::vector<VertexSet> classes;
  for (int v : members) {
    const VertexSet& nb = g.neighbor_set(v);
    int color = 0;
    while (color < static_cast<int>(classes.size()) && !classes[color].is_subset_of(nb)) ++color;
    if (color == static_cast<int>(classes.size())) classes.emplace_back(g.order());
    classes[color].insert(v);
    out.coloring[v] = color;
  }
  out.color_count = static_cast<int>(classes.size());
  return out;
}

int colors_present(const std::vector<int>& coloring, const VertexSet& u) {
  std::vector<char> seen(coloring.size() + 1, 0);
  int count = 0;
  u.for_each([&](int v) {
    int c = coloring[v];
    if (!seen[c]) {
      seen[c] = 1;
      ++count;
    }
  });
  return count;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts{VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n; ++v) (side[v] == 0 ? parts.left : parts.right).insert(v);
  return parts;
}

int hopcroft_karp(const Graph& g, const VertexSet& u, const Bipartition& sides) {
  const int n = g.order();
  constexpr int kInf = std::numeric_limits<int>::max();
  const auto left = (u & sides.left).to_vector();
  const VertexSet right = u & sides.right;

  std::vector<int> mate(n, -1);
  std::vector<int> dist(n, kInf);
  std::vector<int> queue;

  // Layered BFS from free left vertices; true iff an augmenting path exists.
  auto bfs = [&]() {
    queue.clear();
    for (int a : left) {
      if (mate[a] < 0) {
        dist[a] = 0;
        queue.push_back(a);
      } else {
        dist[a] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int a = queue[head];
      for (int b : g.neighbors(a)) {
        if (!right.contains(b)) continue;
        int next = mate[b];
        if (next < 0) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[a] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, int a) -> bool {
    for (int b : g.neighbors(a)) {
      if (!right.contains(b)) continue;
      int next = mate[b];
      if (next < 0 || (dist[next] == dist[a] + 1 && self(self, next))) {
        mate[a] = b;
        mate[b] = a;
        return true;
      }
    }
    dist[a] = kInf;
    return false;
  };

  int matching = 0;
  while (bfs())
    for (int a : left)
      if (mate[a] < 0 && dfs(dfs, a)) ++matching;
  return matching;
}

int bipartite_stable_bound(const Graph& g, const VertexSet& u, const Bipartition& sides) {
  return u.size() - hopcroft_karp(g, u, sides);
}

int bipartite_stable_bound(const Graph& g, const VertexSet& u) {
  auto sub = induced_delete(g, u.complement());
  auto parts = is_bipartite(sub.graph);
  if (!parts) throw ContractError("bipartite_stable_bound: G[U] is not bipartite");
  Bipartition lifted{VertexSet(g.order()), VertexSet(g.order())};
  parts->left.for_each([&](int v) { lifted.left.insert(sub.original[v]); });
  parts->right.for_each([&](int v) { lifted.right.insert(sub.original[v]); });
  return bipartite_stable_bound(g, u, lifted);
}

}  // namespace cvc
