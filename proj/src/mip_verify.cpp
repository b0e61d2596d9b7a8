#include <algorithm>
#include <cmath>
#include <limits>

#include "cvc/errors.hpp"
#include "cvc/mip.hpp"
#include "cvc/oracle.hpp"

namespace cvc::mip {
namespace {

constexpr int kEnumerationCap = 10;

void check_enumeration_cap(const Graph& g) {
  if (g.order() > kEnumerationCap)
    throw InputError("exhaustive formulation check refused: n = " + std::to_string(g.order()) +
                     " exceeds cap " + std::to_string(kEnumerationCap));
}

VertexSet mask_to_set(int n, unsigned long mask) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) s.insert(v);
  return s;
}

// Searches for binary z (and d from feasible_d) placing chi^C in the model.
class ParbPointSearch {
 public:
  ParbPointSearch(const MipModel& model, const RootedDigraph& dg)
      : model_(model), dg_(dg), n_(dg.order()) {
    xi_.resize(n_);
    di_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      xi_[v] = model.variable(x_name(v));
      di_[v] = model.variable(d_name(v));
    }
    for (const auto& a : dg.arcs()) zi_.push_back(model.variable(z_name(a)));
    if (auto a = dg.find_arc(dg.root(), dg.secondary_root())) root_arc_ = *a;
  }

  bool exists(const VertexSet& c) {
    x_.assign(n_, 0);
    c.for_each([&](int v) { x_[v] = 1; });
    z_.assign(dg_.arcs().size(), 0);

    // Vertices needing an in-arc, in BFS order from the covered roots so that
    // the first complete choice is usually a BFS arborescence.
    std::vector<int> rank(n_, n_);
    std::vector<int> order;
    for (int s : {dg_.root(), dg_.secondary_root()})
      if (s >= 0 && c.contains(s) && rank[s] == n_) {
        rank[s] = static_cast<int>(order.size());
        order.push_back(s);
      }
    for (std::size_t head = 0; head < order.size(); ++head)
      for (std::size_t a = 0; a < dg_.arcs().size(); ++a) {
        const auto& arc = dg_.arcs()[a];
        if (arc.tail == order[head] && c.contains(arc.head) && rank[arc.head] == n_) {
          rank[arc.head] = static_cast<int>(order.size());
          order.push_back(arc.head);
        }
      }
    c.for_each([&](int v) {
      if (rank[v] == n_) {
        rank[v] = static_cast<int>(order.size());
        order.push_back(v);
      }
    });

    pending_.clear();
    choices_.clear();
    for (int v : order) {
      if (v == dg_.root() || v == dg_.secondary_root()) continue;
      std::vector<int> options;
      for (int a : dg_.in_arcs(v))
        if (c.contains(dg_.arcs()[a].tail)) options.push_back(a);
      if (options.empty()) return false;  // z(in(v)) = 1 cannot hold
      std::sort(options.begin(), options.end(),
                [&](int a, int b) { return rank[dg_.arcs()[a].tail] < rank[dg_.arcs()[b].tail]; });
      pending_.push_back(v);
      choices_.push_back(std::move(options));
    }
    return search(0);
  }

 private:
  bool search(std::size_t k) {
    if (k == pending_.size()) {
      std::vector<int> root_options{0};
      if (root_arc_ >= 0 && x_[dg_.root()] && x_[dg_.secondary_root()]) root_options = {1, 0};
      for (int o : root_options) {
        if (root_arc_ >= 0) z_[root_arc_] = o;
        if (complete_point_ok()) return true;
      }
      if (root_arc_ >= 0) z_[root_arc_] = 0;
      return false;
    }
    for (int a : choices_[k]) {
      z_[a] = 1;
      // More arcs at 1 only tighten the MTZ rows, so an infeasible partial
      // choice has no feasible completion.
      if (feasible_d(dg_, z_, x_) && search(k + 1)) return true;
      z_[a] = 0;
    }
    return false;
  }

  bool complete_point_ok() {
    auto d = feasible_d(dg_, z_, x_);
    if (!d) return false;
    std::vector<double> values(model_.variables().size(), 0.0);
    for (int v = 0; v < n_; ++v) {
      values[xi_[v]] = x_[v];
      values[di_[v]] = (*d)[v];
    }
    for (std::size_t a = 0; a < zi_.size(); ++a) values[zi_[a]] = z_[a];
    return check_point(model_, values);
  }

  const MipModel& model_;
  const RootedDigraph& dg_;
  int n_;
  std::vector<int> xi_, di_, zi_;
  int root_arc_ = -1;
  std::vector<int> x_, z_;
  std::vector<int> pending_;
  std::vector<std::vector<int>> choices_;
};

}  // namespace

std::optional<ParbMismatch> find_parb_mismatch(const Graph& g, int r, int r1,
                                               const ParbBuilder& builder) {
  check_enumeration_cap(g);
  const int n = g.order();
  const MipModel model = builder(g, r, r1);
  const RootedDigraph dg = build_digraph(g, r, r1);
  ParbPointSearch search(model, dg);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    VertexSet c = mask_to_set(n, mask);
    const bool is_cvc = oracle::check_cvc(g, c).valid();
    const bool feasible = search.exists(c);
    if (is_cvc != feasible) return ParbMismatch{c, is_cvc, feasible};
  }
  return std::nullopt;
}

bool enumerate_verify_parb(const Graph& g, int r, int r1, const ParbBuilder& builder) {
  return !find_parb_mismatch(g, r, r1, builder).has_value();
}

bool farkas_refutes(const MipModel& model, const Assignment& fixed,
                    const std::map<std::string, double>& multipliers) {
  const auto& vars = model.variables();
  std::vector<double> c(vars.size(), 0.0);
  double beta = 0;
  for (const auto& [name, mu] : multipliers) {
    const Constraint* row = model.find_constraint(name);
    if (!row) return false;
    if ((row->sense == Sense::le && mu < 0) || (row->sense == Sense::ge && mu > 0)) return false;
    for (const auto& t : row->terms) c[t.var] += mu * t.coef;
    beta += mu * row->rhs;
  }
  std::vector<char> is_fixed(vars.size(), 0);
  for (const auto& [name, value] : fixed) {
    int j = model.variable(name);
    beta -= c[j] * value;
    is_fixed[j] = 1;
  }
  double lhs_min = 0;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    if (is_fixed[j] || c[j] == 0) continue;
    const double bound = c[j] > 0 ? vars[j].lower : vars[j].upper;
    if (std::isinf(bound)) return false;
    lhs_min += c[j] * bound;
  }
  return lhs_min > beta + kTolerance;
}

std::optional<VertexSet> find_pstp_mismatch(const Graph& g, const PstpBuilder& builder) {
  check_enumeration_cap(g);
  const int n = g.order();
  const MipModel model = builder(g);
  const auto& edges = g.edges();

  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    VertexSet c = mask_to_set(n, mask);
    auto cert = oracle::check_cvc(g, c);
    Assignment x;
    for (int v = 0; v < n; ++v) x[x_name(v)] = c.contains(v) ? 1.0 : 0.0;

    if (cert.valid()) {
      // y = a BFS spanning tree of G[C].
      Assignment point = x;
      for (auto [u, v] : edges) point[y_name(u, v)] = 0.0;
      if (!c.empty()) {
        std::vector<char> seen(n, 0);
        std::vector<int> queue{c.lowest()};
        seen[queue[0]] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
          for (int w : g.neighbors(queue[head]))
            if (c.contains(w) && !seen[w]) {
              seen[w] = 1;
              point[y_name(std::min(queue[head], w), std::max(queue[head], w))] = 1.0;
              queue.push_back(w);
            }
      }
      if (!check_integer_point(model, point)) return c;
      continue;
    }

    std::map<std::string, double> mult;
    if (!cert.is_cover) {
      for (auto [u, v] : edges)
        if (!c.contains(u) && !c.contains(v)) {
          mult["cover_" + std::to_string(u) + "_" + std::to_string(v)] = -1;
          break;
        }
    } else {
      // y(E(C)) >= |C| - 1 from the cardinality and linking rows, against
      // y(E(K)) <= |K| - 1 summed over the components K of G[C].
      mult["card"] = -1;
      for (auto [u, v] : edges) {
        const std::string suffix = std::to_string(u) + "_" + std::to_string(v);
        if (!c.contains(u)) mult["link_u_" + suffix] = 1;
        else if (!c.contains(v)) mult["link_v_" + suffix] = 1;
      }
      std::vector<int> comp(n, -1);
      c.for_each([&](int s) {
        if (comp[s] >= 0) return;
        unsigned long kmask = 0;
        std::vector<int> queue{s};
        comp[s] = s;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          kmask |= 1UL << queue[head];
          for (int w : g.neighbors(queue[head]))
            if (c.contains(w) && comp[w] < 0) {
              comp[w] = s;
              queue.push_back(w);
            }
        }
        int inner = 0;
        for (auto [u, v] : edges)
          if ((kmask >> u & 1) && (kmask >> v & 1)) ++inner;
        // Tree components have no row; y <= 1 bounds give the same sum.
        if (inner >= static_cast<int>(queue.size())) mult[subset_row_name(kmask)] = 1;
      });
    }
    if (!farkas_refutes(model, x, mult)) return c;
  }
  return std::nullopt;
}

long long count_qr_feasible(const RootedDigraph& dg) {
  const MipModel model = build_qr(dg);
  const int n = dg.order();
  std::vector<int> zi, di(n);
  for (const auto& a : dg.arcs()) zi.push_back(model.variable(z_name(a)));
  for (int v = 0; v < n; ++v) di[v] = model.variable(d_name(v));

  std::vector<int> pending;
  for (int v = 0; v < n; ++v)
    if (v != dg.root()) {
      if (dg.in_arcs(v).empty()) return 0;
      pending.push_back(v);
    }
  const std::vector<int> ones(n, 1);
  std::vector<int> z(dg.arcs().size(), 0);
  std::vector<double> values(model.variables().size(), 0.0);
  long long count = 0;

  auto visit = [&](auto&& self, std::size_t k) -> void {
    if (k == pending.size()) {
      auto d = feasible_d(dg, z, ones);
      if (!d) return;
      for (std::size_t a = 0; a < zi.size(); ++a) values[zi[a]] = z[a];
      for (int v = 0; v < n; ++v) values[di[v]] = (*d)[v];
      if (check_point(model, values)) ++count;
      return;
    }
    for (int a : dg.in_arcs(pending[k])) {
      z[a] = 1;
      self(self, k + 1);
      z[a] = 0;
    }
  };
  visit(visit, 0);
  return count;
}

}  // namespace cvc::mip
