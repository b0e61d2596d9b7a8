#include "cvc/oracle.hpp"

#include <string>
#include <vector>

#include "cvc/errors.hpp"

namespace cvc::oracle {
namespace {

void check_cap(const Graph& g, int cap) {
  if (g.order() > cap)
    throw InputError("exhaustive search refused: n = " + std::to_string(g.order()) +
                     " exceeds cap " + std::to_string(cap));
}

// Plain BFS over G minus `removed`, kept separate from the library's
// connectivity helpers so the oracle shares no code with the solver.
bool remainder_connected(const Graph& g, const std::vector<char>& removed) {
  const int n = g.order();
  int start = -1, remaining = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      if (start < 0) start = v;
      ++remaining;
    }
  if (remaining <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> queue{start};
  seen[start] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int w : g.neighbors(queue[head]))
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  return static_cast<int>(queue.size()) == remaining;
}

struct StableSearch {
  const Graph& g;
  bool need_connected;
  std::vector<char> in_s;
  std::vector<int> blocked_count;
  int current = 0;
  int best = -1;
  std::vector<char> best_s;

  StableSearch(const Graph& graph, bool connected)
      : g(graph), need_connected(connected), in_s(graph.order(), 0),
        blocked_count(graph.order(), 0) {}

  void run(int v) {
    const int n = g.order();
    if (current + (n - v) <= best) return;
    if (v == n) {
      if (need_connected && !remainder_connected(g, in_s)) return;
      if (current > best) {
        best = current;
        best_s = in_s;
      }
      return;
    }
    if (blocked_count[v] == 0) {
      in_s[v] = 1;
      // A disconnected remainder can never be repaired by adding more stable
      // vertices, so prune as soon as it happens.
      if (!need_connected || remainder_connected(g, in_s)) {
        ++current;
        for (int w : g.neighbors(v)) ++blocked_count[w];
        run(v + 1);
        for (int w : g.neighbors(v)) --blocked_count[w];
        --current;
      }
      in_s[v] = 0;
    }
    run(v + 1);
  }
};

}  // namespace

CvcCertificate check_cvc(const Graph& g, const VertexSet& cover) {
  const int n = g.order();
  CvcCertificate cert;
  cert.cover = cover;
  cert.is_cover = true;
  for (auto [u, v] : g.edges())
    if (!cover.contains(u) && !cover.contains(v)) {
      cert.is_cover = false;
      break;
    }

  std::vector<int> members;
  for (int v = 0; v < n && v < cover.universe(); ++v)
    if (cover.contains(v)) members.push_back(v);
  if (members.empty()) {
    cert.is_connected_induced = g.size() == 0;
    return cert;
  }
  std::vector<char> seen(n, 0);
  std::vector<int> queue{members.front()};
  seen[members.front()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int w : g.neighbors(queue[head]))
      if (cover.contains(w) && !seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  cert.is_connected_induced = queue.size() == members.size();
  return cert;
}

CvcOptimum brute_force_cvc(const Graph& g, int cap) {
  check_cap(g, cap);
  if (g.order() == 0) throw InputError("graph has no vertices");
  std::vector<char> none(g.order(), 0);
  if (!remainder_connected(g, none)) throw InputError("graph is not connected");

  StableSearch search(g, true);
  search.run(0);
  CvcOptimum out{VertexSet(g.order()), 0};
  for (int v = 0; v < g.order(); ++v)
    if (!search.best_s[v]) out.cover.insert(v);
  out.size = out.cover.size();
  return out;
}

int brute_force_vc(const Graph& g, int cap) {
  check_cap(g, cap);
  StableSearch search(g, false);
  search.run(0);
  return g.order() - search.best;
}

bool is_interesting(const Graph& g, int cap) {
  return brute_force_cvc(g, cap).size > brute_force_vc(g, cap);
}

}  // namespace cvc::oracle
