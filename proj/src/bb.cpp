#include "cvc/bb.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <numeric>
#include <vector>

#include "cvc/bounds.hpp"
#include "cvc/errors.hpp"
#include "cvc/oracle.hpp"

namespace cvc {
namespace {

using Clock = std::chrono::steady_clock;

VertexSet include_candidates(const Graph& g, const VertexSet& s_with_v, VertexSet u, int v,
                             bool connected) {
  u -= g.neighbor_set(v);
  if (connected) u -= articulation_points_without(g, s_with_v);
  return u;
}

// Coloring computed at some ancestor; valid for every descendant because U
// only shrinks along a root-to-leaf path.
struct ColoringCache {
  std::vector<int> coloring;
  int domain_size = 0;
};

struct Frame {
  VertexSet s;
  VertexSet u;
  int s_size = 0;
  std::shared_ptr<const ColoringCache> cache;
};

// Runs the search on a copy of the graph relabeled by increasing degree
// (ties: larger original label first), so the highest-degree candidate is
// always the highest set bit of U.
class Engine {
 public:
  Engine(const Graph& g, const SolverConfig& cfg) : cfg_(cfg), start_(Clock::now()) {
    if (g.order() == 0) throw InputError("graph has no vertices");
    if (cfg.time_limit && !(*cfg.time_limit > 0)) throw InputError("time limit must be positive");
    if (cfg.require_connected && !is_connected(g)) throw InputError("graph is not connected");
    if (cfg.time_limit) deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(
                                                  std::chrono::duration<double>(*cfg.time_limit));
    const int n = g.order();
    original_.resize(n);
    std::iota(original_.begin(), original_.end(), 0);
    std::sort(original_.begin(), original_.end(), [&](int a, int b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
      return a > b;
    });
    rank_.resize(n);
    for (int p = 0; p < n; ++p) rank_[original_[p]] = p;
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (auto [u, v] : g.edges()) edges.emplace_back(rank_[u], rank_[v]);
    h_ = Graph::from_edges(n, edges);

    if (cfg.use_bipartite_bound) sides_ = is_bipartite(h_);
    best_ = VertexSet(n);
    if (cfg.warm_start && n >= 2 && is_connected(g)) {
      auto cover = greedy_cvc_2approx(g);
      for (int v = 0; v < n; ++v)
        if (!cover.contains(v)) best_.insert(rank_[v]);
      best_size_ = best_.size();
    }
  }

  int order() const { return h_.order(); }

  SearchNode root() const {
    VertexSet u = h_.all_vertices();
    if (cfg_.require_connected) u -= articulation_points(h_);
    return {VertexSet(order()), u};
  }

  bool out_of_time() const { return deadline_ && Clock::now() >= *deadline_; }

  // Stack-based search from `start`. Returns false if the deadline hit.
  bool run(SearchNode start) {
    ++nodes_;
    consider(start.s, start.s.size());
    std::vector<Frame> stack;
    stack.push_back({std::move(start.s), std::move(start.u), 0, nullptr});
    stack.back().s_size = stack.back().s.size();
    while (!stack.empty()) {
      if (out_of_time()) {
        for (const auto& f : stack) open_bound_ = std::max(open_bound_, f.s_size + f.u.size());
        return false;
      }
      Frame f = std::move(stack.back());
      stack.pop_back();
      while (!f.u.empty()) {
        if (!(best_size_ < f.s_size + bound(f.u, f.cache))) {
          ++prunes_;
          if (cfg_.on_prune) cfg_.on_prune(to_original(f.s), to_original(f.u), best_size_);
          break;
        }
        const int v = f.u.highest();
        f.u.erase(v);
        stack.push_back({f.s, f.u, f.s_size, f.cache});
        f.s.insert(v);
        ++f.s_size;
        f.u = include_candidates(h_, f.s, std::move(f.u), v, cfg_.require_connected);
        ++nodes_;
        consider(f.s, f.s_size);
      }
    }
    return true;
  }

  // Restricted searches, one per vertex in decreasing degree order.
  bool run_russian_doll() {
    const int n = order();
    const VertexSet root_cut =
        cfg_.require_connected ? articulation_points(h_) : VertexSet(n);
    for (int p = n - 1; p >= 0; --p) {
      if (out_of_time()) {
        // Unvisited steps can still contribute v_p plus lower-ranked vertices.
        open_bound_ = std::max(open_bound_, p + 1);
        return false;
      }
      if (root_cut.contains(p)) continue;
      SearchNode node{VertexSet::of(n, {p}), VertexSet(n)};
      for (int q = 0; q < p; ++q) node.u.insert(q);
      node.u = include_candidates(h_, node.s, std::move(node.u), p, cfg_.require_connected);
      if (!run(std::move(node))) {
        open_bound_ = std::max(open_bound_, p);
        return false;
      }
    }
    return true;
  }

  SolveReport report(bool finished) const {
    const int n = order();
    SolveReport r;
    r.cover = VertexSet(n);
    for (int p = 0; p < n; ++p)
      if (!best_.contains(p)) r.cover.insert(original_[p]);
    r.cover_size = r.cover.size();
    r.node_count = nodes_;
    r.wall_time = std::chrono::duration<double>(Clock::now() - start_).count();
    r.status = finished ? SolveStatus::optimal : SolveStatus::time_limit;
    r.best_bound = finished ? best_size_ : std::max(best_size_, open_bound_);
    r.bound_evaluations = bound_evaluations_;
    r.coloring_recomputations = recolors_;
    r.prunes = prunes_;
    r.bound_kind = sides_ ? "bipartite-matching" : "coloring";
    r.branching_rule = "highest degree first, ties by smaller label";
    return r;
  }

  const Graph& original_graph_relabeled() const { return h_; }

 private:
  int bound(const VertexSet& u, std::shared_ptr<const ColoringCache>& cache) {
    ++bound_evaluations_;
    if (sides_) return bipartite_stable_bound(h_, u, *sides_);
    const int size = u.size();
    if (cfg_.coloring_reuse && cache && size >= cfg_.recolor_ratio * cache->domain_size)
      return colors_present(cache->coloring, u);
    ++recolors_;
    auto fresh = greedy_color_bound(h_, u);
    if (cfg_.coloring_reuse) {
      auto entry = std::make_shared<ColoringCache>();
      entry->coloring = std::move(fresh.coloring);
      entry->domain_size = size;
      cache = std::move(entry);
    }
    return fresh.color_count;
  }

  void consider(const VertexSet& s, int size) {
    if (size <= best_size_) return;
    best_ = s;
    best_size_ = size;
#ifndef NDEBUG
    VertexSet cover = h_.all_vertices() - s;
    auto cert = oracle::check_cvc(h_, cover);
    if (!cert.is_cover || (cfg_.require_connected && !cert.is_connected_induced))
      throw std::logic_error("branch and bound stored an infeasible incumbent");
#endif
  }

  VertexSet to_original(const VertexSet& s) const {
    VertexSet out(order());
    s.for_each([&](int p) { out.insert(original_[p]); });
    return out;
  }

  const SolverConfig& cfg_;
  Clock::time_point start_;
  std::optional<Clock::time_point> deadline_;
  std::vector<int> original_;  // rank -> original label
  std::vector<int> rank_;      // original label -> rank
  Graph h_;
  std::optional<Bipartition> sides_;
  VertexSet best_;
  int best_size_ = 0;
  int open_bound_ = 0;
  long long nodes_ = 0;
  long long bound_evaluations_ = 0;
  long long recolors_ = 0;
  long long prunes_ = 0;
};

SolveReport finish(const Graph& g, const SolverConfig& cfg, SolveReport r) {
  auto cert = oracle::check_cvc(g, r.cover);
  if (!cert.is_cover || (cfg.require_connected && !cert.is_connected_induced))
    throw std::logic_error("solver produced an invalid cover");
  return r;
}

}  // namespace

std::string to_string(SolveStatus status) {
  return status == SolveStatus::optimal ? "optimal" : "time_limit";
}

std::pair<SearchNode, SearchNode> branch(const Graph& g, const SearchNode& node, int v) {
  if (!node.u.contains(v)) throw ContractError("branch: vertex is not a candidate");
  SearchNode exclude{node.s, node.u};
  exclude.u.erase(v);
  SearchNode include{node.s, VertexSet(g.order())};
  include.s.insert(v);
  if (!is_connected_without(g, include.s))
    throw ContractError("branch: removing the candidate disconnects the graph");
  include.u = include_candidates(g, include.s, exclude.u, v, true);
  return {std::move(exclude), std::move(include)};
}

SearchNode root_node(const Graph& g) {
  return {VertexSet(g.order()), g.all_vertices() - articulation_points(g)};
}

SolveReport solve_cvc_bb(const Graph& g, const SolverConfig& cfg) {
  if (cfg.use_russian_doll) return russian_doll_solve(g, cfg);
  Engine engine(g, cfg);
  bool finished = engine.run(engine.root());
  return finish(g, cfg, engine.report(finished));
}

SolveReport russian_doll_solve(const Graph& g, const SolverConfig& cfg) {
  Engine engine(g, cfg);
  bool finished = engine.run_russian_doll();
  return finish(g, cfg, engine.report(finished));
}

SolveReport solve_vc_bb(const Graph& g, SolverConfig cfg) {
  cfg.require_connected = false;
  return solve_cvc_bb(g, cfg);
}

VertexSet greedy_cvc_2approx(const Graph& g, int root) {
  const int n = g.order();
  if (n < 2) throw InputError("2-approximation needs at least two vertices");
  if (!is_connected(g)) throw InputError("graph is not connected");
  auto tree = dfs_tree(g, root);
  std::vector<int> children(n, 0);
  VertexSet internal(n);
  for (auto [parent, child] : tree) {
    ++children[parent];
    internal.insert(parent);
  }
  if (children[root] == 1 && g.neighbor_set(root).is_subset_of(internal)) internal.erase(root);
  return internal;
}

}  // namespace cvc
