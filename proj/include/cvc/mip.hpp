#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cvc/graph.hpp"

namespace cvc::mip {

enum class VarKind { binary, continuous };
enum class Sense { le, eq, ge };

struct Variable {
  std::string name;
  VarKind kind = VarKind::continuous;
  double lower = 0;
  double upper = 0;
};

struct Term {
  int var = 0;
  double coef = 0;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::le;
  double rhs = 0;
};

/// Solver-agnostic mixed-integer model with a minimization objective.
/// Variable and constraint names are unique; terms reference declared
/// variables by index.
class MipModel {
 public:
  int add_variable(std::string name, VarKind kind, double lower, double upper);
  void add_constraint(std::string name, std::vector<Term> terms, Sense sense, double rhs);
  void set_objective(std::vector<Term> terms);
  /// Free-form metadata, emitted as LP comment lines.
  void add_comment(std::string line) { comments_.push_back(std::move(line)); }

  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return rows_; }
  const std::vector<Term>& objective() const { return objective_; }
  const std::vector<std::string>& comments() const { return comments_; }

  std::optional<int> find_variable(std::string_view name) const;
  const Constraint* find_constraint(std::string_view name) const;
  /// Index of a variable; throws InputError if undeclared.
  int variable(std::string_view name) const;

  /// Drops the named rows. Lets callers derive model variants.
  void remove_constraints(const std::function<bool(const Constraint&)>& pred);

 private:
  void check_terms(const std::vector<Term>& terms) const;

  std::vector<Variable> vars_;
  std::vector<Constraint> rows_;
  std::vector<Term> objective_;
  std::vector<std::string> comments_;
  std::unordered_map<std::string, int> var_index_;
  std::unordered_map<std::string, int> row_index_;
};

/// Absolute tolerance for bounds and rows.
inline constexpr double kTolerance = 1e-6;

using Assignment = std::map<std::string, double>;

/// Every bound, integrality requirement and row holds within kTolerance.
/// Throws InputError if a variable has no value.
bool check_integer_point(const MipModel& model, const Assignment& values);
/// Same, with values indexed like model.variables().
bool check_point(const MipModel& model, std::span<const double> values);

/// LP text format: comment lines, Minimize, Subject To (declaration order),
/// Bounds, Binaries, End. Byte-identical for identical models.
std::string write_lp(const MipModel& model);

struct Arc {
  int tail = 0;
  int head = 0;
  auto operator<=>(const Arc&) const = default;
};

/// Directed graph on 0..n-1 with a root r and, for the two-root
/// construction, a secondary root r1. Arcs are kept sorted by (tail, head).
class RootedDigraph {
 public:
  RootedDigraph(int n, std::vector<Arc> arcs, int root, int secondary_root = -1);

  int order() const { return n_; }
  int root() const { return r_; }
  /// -1 when there is a single root.
  int secondary_root() const { return r1_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  /// Indices into arcs() of the arcs entering v.
  const std::vector<int>& in_arcs(int v) const { return in_[v]; }
  std::optional<int> find_arc(int tail, int head) const;

 private:
  int n_;
  int r_;
  int r1_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> in_;
};

/// Orients G for roots r, r1 (rr1 must be an edge): edges at r point away
/// from r, other edges at r1 point away from r1, all remaining edges are
/// bidirected. Afterwards in(r) = {} and in(r1) = {r -> r1}.
RootedDigraph build_digraph(const Graph& g, int r, int r1);

/// Bidirects every edge and drops the arcs entering r.
RootedDigraph bidirected_rooted(const Graph& g, int r);

/// r = a maximum-degree vertex, r1 = a maximum-degree neighbor of r, ties
/// broken by smaller label. Requires at least one edge.
std::pair<int, int> default_roots(const Graph& g);

std::string x_name(int v);
std::string y_name(int u, int v);
std::string z_name(const Arc& a);
std::string d_name(int v);

/// Two-root arborescence formulation: binary x over V, binary z over the
/// arcs of build_digraph(g, r, r1), continuous d in [0, n-1]. Rows: one
/// cover row per edge, indegree rows z(in(v)) = x_v for v other than the
/// roots, MTZ rows d_v >= n (z_uv - 1) + d_u + x_v per arc, d_r = 0,
/// z(A) = x(V) - 1, and linking z_uv <= x_u, z_uv <= x_v.
MipModel build_parb(const Graph& g, int r, int r1);

/// Arborescence formulation over `dg` rooted at dg.root(): binary z per arc,
/// d in [0, n-1], z(in(v)) = 1 for v != r, d_v >= n (z_uv - 1) + d_u + 1,
/// d_r = 0, z(A) = n - 1. Throws InputError if arcs enter the root.
MipModel build_qr(const RootedDigraph& dg);

inline constexpr int kPstpCap = 15;

/// Subtour formulation: binary x, y in [0, 1]^E, cover rows, subset rows
/// y(E(U)) <= |U| - 1 for each U with |E(U)| >= |U| (the rest are implied),
/// y(E) = x(V) - 1 and linking rows. Refuses n > cap.
MipModel build_pstp(const Graph& g, int cap = kPstpCap);

/// Subset row name for the vertex set encoded by `mask`.
std::string subset_row_name(unsigned long mask);

/// d satisfying d_r = 0, 0 <= d <= n-1 and every MTZ row
/// d_v >= n (z_uv - 1) + d_u + x_v for the fixed binary z, x, found as
/// longest paths in the difference-constraint graph; nullopt if a positive
/// cycle makes the system infeasible.
std::optional<std::vector<double>> feasible_d(const RootedDigraph& dg, std::span<const int> z,
                                              std::span<const int> x);

struct Witness {
  std::vector<int> z;     // per arc of build_digraph(g, r, r1)
  std::vector<double> d;  // per vertex
};

/// Explicit (z, d) for a connected vertex cover: a BFS arborescence of the
/// cover's induced digraph, rooted at r when r is in the cover (the arc
/// r -> r1 is then always used) and at r1 otherwise, with d the depth and 0
/// off the cover. Throws InputError if `cover` is not a connected cover.
Witness witness_parb(const Graph& g, const VertexSet& cover, int r, int r1);

/// Variable values of (chi^cover, z, d) for build_parb(g, r, r1).
Assignment parb_assignment(const RootedDigraph& dg, const VertexSet& cover, const Witness& w);

using ParbBuilder = std::function<MipModel(const Graph&, int, int)>;

struct ParbMismatch {
  VertexSet subset;
  bool is_cvc = false;
  bool formulation_feasible = false;
};

/// Checks, for every C subset of V, that some binary z and some d put
/// (chi^C, z, d) in the model iff C is a connected vertex cover. Candidate z
/// range over one in-arc per non-root cover vertex (the only z meeting the
/// indegree and linking rows) plus the optional r -> r1 arc; partial choices
/// are pruned with feasible_d and complete ones are checked against the
/// built model. Returns the first disagreement. Refuses n > 10.
std::optional<ParbMismatch> find_parb_mismatch(const Graph& g, int r, int r1,
                                               const ParbBuilder& builder = build_parb);
bool enumerate_verify_parb(const Graph& g, int r, int r1,
                           const ParbBuilder& builder = build_parb);

/// Verifies that the multipliers certify infeasibility of `model` once the
/// variables in `fixed` are set: the weighted row sum (<= rows weighted
/// >= 0, >= rows <= 0, = rows free) has a left-hand side whose minimum over
/// the remaining variables' bounds exceeds its right-hand side. Returns
/// false for missing rows or wrongly signed multipliers.
bool farkas_refutes(const MipModel& model, const Assignment& fixed,
                    const std::map<std::string, double>& multipliers);

using PstpBuilder = std::function<MipModel(const Graph&)>;

/// For every C subset of V: a connected cover must admit the spanning-tree y
/// of G[C] (checked against the model), and any other C must be refuted by
/// a Farkas certificate (a violated cover row, or the cardinality row
/// against the subset rows of G[C]'s components). Returns the first C for
/// which the model disagrees with the checker. Refuses n > 10.
std::optional<VertexSet> find_pstp_mismatch(const Graph& g,
                                            const PstpBuilder& builder = [](const Graph& h) {
                                              return build_pstp(h);
                                            });

/// Number of binary z that extend to a point of build_qr(dg). Only z with
/// exactly one in-arc per non-root vertex can meet the indegree rows, so
/// those are enumerated and each is checked against the model.
long long count_qr_feasible(const RootedDigraph& dg);

}  // namespace cvc::mip
