#include <algorithm>
#include <limits>
#include <string>

#include "cvc/errors.hpp"
#include "cvc/mip.hpp"
#include "cvc/oracle.hpp"

namespace cvc::mip {

RootedDigraph::RootedDigraph(int n, std::vector<Arc> arcs, int root, int secondary_root)
    : n_(n), r_(root), r1_(secondary_root), arcs_(std::move(arcs)), in_(n) {
  if (root < 0 || root >= n || secondary_root >= n) throw InputError("root out of range");
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
    throw InputError("parallel arcs");
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const auto& a = arcs_[i];
    if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n || a.tail == a.head)
      throw InputError("invalid arc");
    in_[a.head].push_back(static_cast<int>(i));
  }
}

std::optional<int> RootedDigraph::find_arc(int tail, int head) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{tail, head});
  if (it == arcs_.end() || *it != Arc{tail, head}) return std::nullopt;
  return static_cast<int>(it - arcs_.begin());
}

RootedDigraph build_digraph(const Graph& g, int r, int r1) {
  const int n = g.order();
  if (r < 0 || r >= n || r1 < 0 || r1 >= n || !g.adjacent(r, r1))
    throw InputError("roots " + std::to_string(r) + ", " + std::to_string(r1) +
                     " are not adjacent");
  std::vector<Arc> arcs;
  for (auto [u, v] : g.edges()) {
    if (u == r || v == r) {
      arcs.push_back({r, u == r ? v : u});
    } else if (u == r1 || v == r1) {
      arcs.push_back({r1, u == r1 ? v : u});
    } else {
      arcs.push_back({u, v});
      arcs.push_back({v, u});
    }
  }
  return RootedDigraph(n, std::move(arcs), r, r1);
}

RootedDigraph bidirected_rooted(const Graph& g, int r) {
  if (r < 0 || r >= g.order()) throw InputError("root out of range");
  std::vector<Arc> arcs;
  for (auto [u, v] : g.edges()) {
    if (v != r) arcs.push_back({u, v});
    if (u != r) arcs.push_back({v, u});
  }
  return RootedDigraph(g.order(), std::move(arcs), r);
}

std::pair<int, int> default_roots(const Graph& g) {
  if (g.size() == 0) throw InputError("graph has no edges to place the roots on");
  int r = 0;
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) > g.degree(r)) r = v;
  int r1 = -1;
  for (int w : g.neighbors(r))
    if (r1 < 0 || g.degree(w) > g.degree(r1)) r1 = w;
  return {r, r1};
}

std::string x_name(int v) { return "x_" + std::to_string(v); }
std::string y_name(int u, int v) { return "y_" + std::to_string(u) + "_" + std::to_string(v); }
std::string z_name(const Arc& a) {
  return "z_" + std::to_string(a.tail) + "_" + std::to_string(a.head);
}
std::string d_name(int v) { return "d_" + std::to_string(v); }

namespace {

std::vector<int> add_x(MipModel& m, int n) {
  std::vector<int> x(n);
  for (int v = 0; v < n; ++v) x[v] = m.add_variable(x_name(v), VarKind::binary, 0, 1);
  return x;
}

void add_cover_rows(MipModel& m, const Graph& g, const std::vector<int>& x) {
  for (auto [u, v] : g.edges())
    m.add_constraint("cover_" + std::to_string(u) + "_" + std::to_string(v),
                     {{x[u], 1}, {x[v], 1}}, Sense::ge, 1);
}

void set_cover_objective(MipModel& m, const std::vector<int>& x) {
  std::vector<Term> obj;
  for (int xv : x) obj.push_back({xv, 1});
  m.set_objective(std::move(obj));
}

}  // namespace

MipModel build_parb(const Graph& g, int r, int r1) {
  const int n = g.order();
  if (n < 2) throw InputError("formulation needs at least two vertices");
  if (!is_connected(g)) throw InputError("graph is not connected");
  auto dg = build_digraph(g, r, r1);
  const auto& arcs = dg.arcs();

  MipModel m;
  m.add_comment("formulation: parb");
  m.add_comment("roots: r=" + std::to_string(r) + " r1=" + std::to_string(r1));
  auto x = add_x(m, n);
  std::vector<int> z(arcs.size()), d(n);
  for (std::size_t a = 0; a < arcs.size(); ++a)
    z[a] = m.add_variable(z_name(arcs[a]), VarKind::binary, 0, 1);
  for (int v = 0; v < n; ++v) d[v] = m.add_variable(d_name(v), VarKind::continuous, 0, n - 1);
  set_cover_objective(m, x);

  // Antiparallel arcs would repeat the same cover row; one per edge.
  add_cover_rows(m, g, x);
  for (int v = 0; v < n; ++v) {
    if (v == r || v == r1) continue;
    std::vector<Term> row;
    for (int a : dg.in_arcs(v)) row.push_back({z[a], 1});
    row.push_back({x[v], -1});
    m.add_constraint("indeg_" + std::to_string(v), std::move(row), Sense::eq, 0);
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    auto [u, v] = arcs[a];
    m.add_constraint("mtz_" + std::to_string(u) + "_" + std::to_string(v),
                     {{d[v], 1}, {d[u], -1}, {z[a], -static_cast<double>(n)}, {x[v], -1}},
                     Sense::ge, -n);
  }
  m.add_constraint("root", {{d[r], 1}}, Sense::eq, 0);
  std::vector<Term> card;
  for (int za : z) card.push_back({za, 1});
  for (int xv : x) card.push_back({xv, -1});
  m.add_constraint("card", std::move(card), Sense::eq, -1);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    auto [u, v] = arcs[a];
    const std::string suffix = std::to_string(u) + "_" + std::to_string(v);
    m.add_constraint("link_tail_" + suffix, {{z[a], 1}, {x[u], -1}}, Sense::le, 0);
    m.add_constraint("link_head_" + suffix, {{z[a], 1}, {x[v], -1}}, Sense::le, 0);
  }
  return m;
}

MipModel build_qr(const RootedDigraph& dg) {
  const int n = dg.order();
  const int r = dg.root();
  if (!dg.in_arcs(r).empty()) throw InputError("arcs enter the root");
  const auto& arcs = dg.arcs();

  MipModel m;
  m.add_comment("formulation: qr");
  m.add_comment("root: r=" + std::to_string(r));
  std::vector<int> z(arcs.size()), d(n);
  for (std::size_t a = 0; a < arcs.size(); ++a)
    z[a] = m.add_variable(z_name(arcs[a]), VarKind::binary, 0, 1);
  for (int v = 0; v < n; ++v)
    d[v] = m.add_variable(d_name(v), VarKind::continuous, 0, std::max(0, n - 1));

  for (int v = 0; v < n; ++v) {
    if (v == r) continue;
    std::vector<Term> row;
    for (int a : dg.in_arcs(v)) row.push_back({z[a], 1});
    m.add_constraint("indeg_" + std::to_string(v), std::move(row), Sense::eq, 1);
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    auto [u, v] = arcs[a];
    m.add_constraint("mtz_" + std::to_string(u) + "_" + std::to_string(v),
                     {{d[v], 1}, {d[u], -1}, {z[a], -static_cast<double>(n)}}, Sense::ge, 1 - n);
  }
  m.add_constraint("root", {{d[r], 1}}, Sense::eq, 0);
  std::vector<Term> card;
  for (int za : z) card.push_back({za, 1});
  m.add_constraint("card", std::move(card), Sense::eq, n - 1);
  return m;
}

std::string subset_row_name(unsigned long mask) { return "sub_" + std::to_string(mask); }

MipModel build_pstp(const Graph& g, int cap) {
  const int n = g.order();
  if (n > cap)
    throw InputError("subtour formulation refused: n = " + std::to_string(n) + " exceeds cap " +
                     std::to_string(cap) + " (one row per dense vertex subset)");
  if (n < 2) throw InputError("formulation needs at least two vertices");
  if (!is_connected(g)) throw InputError("graph is not connected");

  MipModel m;
  m.add_comment("formulation: pstp");
  auto x = add_x(m, n);
  const auto& edges = g.edges();
  std::vector<int> y(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e)
    y[e] = m.add_variable(y_name(edges[e].first, edges[e].second), VarKind::continuous, 0, 1);
  set_cover_objective(m, x);
  add_cover_rows(m, g, x);

  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    std::vector<Term> row;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if ((mask >> edges[e].first & 1) && (mask >> edges[e].second & 1)) row.push_back({y[e], 1});
    const int k = std::popcount(mask);
    if (static_cast<int>(row.size()) >= k)
      m.add_constraint(subset_row_name(mask), std::move(row), Sense::le, k - 1);
  }
  std::vector<Term> card;
  for (int ye : y) card.push_back({ye, 1});
  for (int xv : x) card.push_back({xv, -1});
  m.add_constraint("card", std::move(card), Sense::eq, -1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    const std::string suffix = std::to_string(u) + "_" + std::to_string(v);
    m.add_constraint("link_u_" + suffix, {{y[e], 1}, {x[u], -1}}, Sense::le, 0);
    m.add_constraint("link_v_" + suffix, {{y[e], 1}, {x[v], -1}}, Sense::le, 0);
  }
  return m;
}

std::optional<std::vector<double>> feasible_d(const RootedDigraph& dg, std::span<const int> z,
                                              std::span<const int> x) {
  const int n = dg.order();
  const int r = dg.root();
  const auto& arcs = dg.arcs();
  // Edge u -> v with weight w encodes d_v >= d_u + w. Besides the MTZ rows:
  // r -> v (0) for d_v >= 0 and v -> r (-(n-1)) for d_v <= n-1.
  struct Edge {
    int from, to;
    double w;
  };
  std::vector<Edge> edges;
  edges.reserve(arcs.size() + 2 * n);
  for (std::size_t a = 0; a < arcs.size(); ++a)
    edges.push_back({arcs[a].tail, arcs[a].head,
                     static_cast<double>(n) * (z[a] - 1) + x[arcs[a].head]});
  for (int v = 0; v < n; ++v) {
    if (v == r) continue;
    edges.push_back({r, v, 0.0});
    edges.push_back({v, r, -static_cast<double>(n - 1)});
  }

  std::vector<double> d(n, 0.0);
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (const auto& e : edges)
      if (d[e.from] + e.w > d[e.to] + kTolerance) {
        d[e.to] = d[e.from] + e.w;
        changed = true;
      }
    if (!changed) return d[r] > kTolerance ? std::nullopt : std::optional(d);
  }
  return std::nullopt;
}

Witness witness_parb(const Graph& g, const VertexSet& cover, int r, int r1) {
  if (!oracle::check_cvc(g, cover).valid())
    throw InputError("witness requested for a set that is not a connected vertex cover");
  auto dg = build_digraph(g, r, r1);
  const int n = g.order();
  const bool has_r = cover.contains(r);
  const bool has_r1 = cover.contains(r1);
  if (!has_r && !has_r1) throw std::logic_error("cover misses both ends of edge r r1");

  Witness w{std::vector<int>(dg.arcs().size(), 0), std::vector<double>(n, 0.0)};
  // With r in the cover, r1 can only be entered through r -> r1, so the BFS
  // arborescence from r contains that arc whenever r1 is covered too.
  const int source = has_r ? r : r1;
  std::vector<std::vector<int>> out(n);
  for (std::size_t a = 0; a < dg.arcs().size(); ++a) {
    const auto& arc = dg.arcs()[a];
    if (cover.contains(arc.tail) && cover.contains(arc.head))
      out[arc.tail].push_back(static_cast<int>(a));
  }
  if (has_r && has_r1) {
    // Take r -> r1 first.
    auto& first = out[r];
    auto it = std::find(first.begin(), first.end(), *dg.find_arc(r, r1));
    std::rotate(first.begin(), it, it + 1);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> queue{source};
  seen[source] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int a : out[u]) {
      int v = dg.arcs()[a].head;
      if (seen[v]) continue;
      seen[v] = 1;
      w.z[a] = 1;
      w.d[v] = w.d[u] + 1;
      queue.push_back(v);
    }
  }
  if (static_cast<int>(queue.size()) != cover.size())
    throw std::logic_error("arborescence does not span the cover");
  return w;
}

Assignment parb_assignment(const RootedDigraph& dg, const VertexSet& cover, const Witness& w) {
  Assignment values;
  for (int v = 0; v < dg.order(); ++v) {
    values[x_name(v)] = cover.contains(v) ? 1.0 : 0.0;
    values[d_name(v)] = w.d[v];
  }
  for (std::size_t a = 0; a < dg.arcs().size(); ++a) values[z_name(dg.arcs()[a])] = w.z[a];
  return values;
}

}  // namespace cvc::mip
