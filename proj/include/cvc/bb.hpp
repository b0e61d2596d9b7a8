#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "cvc/graph.hpp"

namespace cvc {

/// A branch-and-bound node: S is a stable set with G \ S connected, U the
/// candidates that may still join S.
struct SearchNode {
  VertexSet s;
  VertexSet u;
};

struct SolverConfig {
  std::optional<double> time_limit;  // seconds, > 0
  bool use_russian_doll = false;
  /// On bipartite inputs, bound with |U| - nu(G[U]) instead of coloring.
  bool use_bipartite_bound = true;
  /// Reuse the coloring of an ancestor node until U drops below
  /// recolor_ratio times the size it had when that coloring was computed.
  bool coloring_reuse = true;
  double recolor_ratio = 0.75;
  /// Seed the incumbent with the complement of greedy_cvc_2approx.
  bool warm_start = true;
  /// false turns off cut-vertex removal: the engine becomes a plain maximum
  /// stable set solver, i.e. it computes a minimum vertex cover.
  bool require_connected = true;
  /// Called whenever the bound test discards a node (original labels).
  std::function<void(const VertexSet& s, const VertexSet& u, int incumbent)> on_prune;
};

enum class SolveStatus { optimal, time_limit };

std::string to_string(SolveStatus status);

struct SolveReport {
  VertexSet cover;
  int cover_size = 0;
  /// Nodes created: one per search root plus one per branching step.
  long long node_count = 0;
  double wall_time = 0;
  SolveStatus status = SolveStatus::optimal;
  /// Upper bound on the largest feasible stable set; equals n - cover_size
  /// when optimal.
  int best_bound = 0;
  long long bound_evaluations = 0;
  long long coloring_recomputations = 0;
  long long prunes = 0;
  std::string bound_kind;      // "coloring" or "bipartite-matching"
  std::string branching_rule;  // candidate pop order
};

/// Splits `node` on candidate v into the exclude child (S, U - v) and the
/// include child (S + v, (U ∩ non-neighbors(v)) - cut-vertices(G - S - v)).
/// Throws ContractError if v is not a candidate or G - S - v is disconnected.
std::pair<SearchNode, SearchNode> branch(const Graph& g, const SearchNode& node, int v);

/// The root node (∅, V - cut-vertices(G)).
SearchNode root_node(const Graph& g);

/// Minimum connected vertex cover by stack-based branch and bound over
/// feasible stable sets. Dispatches to russian_doll_solve when
/// cfg.use_russian_doll is set. Throws InputError for n = 0 or a
/// disconnected graph.
SolveReport solve_cvc_bb(const Graph& g, const SolverConfig& cfg = {});

/// n restricted searches over the vertices in decreasing degree order; step
/// i starts from S = {v_i} with candidates among later non-neighbors of v_i.
/// The incumbent is shared by all steps.
SolveReport russian_doll_solve(const Graph& g, const SolverConfig& cfg = {});

/// Minimum (not necessarily connected) vertex cover with the same engine and
/// connectivity handling switched off.
SolveReport solve_vc_bb(const Graph& g, SolverConfig cfg = {});

/// Connected vertex cover of size at most twice the optimum: the non-leaf
/// vertices of dfs_tree(g, root). A root with a single child is dropped when
/// all its neighbors are already non-leaves. Requires g connected, n >= 2.
VertexSet greedy_cvc_2approx(const Graph& g, int root = 0);

}  // namespace cvc
