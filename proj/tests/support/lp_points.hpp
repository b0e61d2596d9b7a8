#pragma once

#include <vector>

#include "cvc/mip.hpp"
#include "cvc/random.hpp"

namespace cvc::testing {

using mip::Assignment;
using mip::MipModel;
using mip::VarKind;

// Random points mixing feasible witnesses, small perturbations of them and
// uniform noise, so both verdicts occur often.
inline std::vector<Assignment> sample_points(const MipModel& m, const std::vector<Assignment>& seeds,
                                                 int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Assignment> out;
  for (int i = 0; i < count; ++i) {
    Assignment a;
    const int mode = static_cast<int>(rng.below(3));
    if (mode < 2 && !seeds.empty()) {
      a = seeds[rng.below(seeds.size())];
      if (mode == 1) {
        auto& v = m.variables()[rng.below(m.variables().size())];
        a[v.name] = v.kind == VarKind::binary ? 1 - a[v.name] : a[v.name] + (rng.uniform() < 0.5 ? -1 : 1);
      }
    } else {
      for (auto& v : m.variables())
        a[v.name] = v.kind == VarKind::binary ? static_cast<double>(rng.below(2))
                                              : static_cast<double>(rng.below(static_cast<std::uint64_t>(v.upper) + 2)) - 0.5;
    }
    out.push_back(std::move(a));
  }
  return out;
}

/// P_arb points for every connected cover of g under the default roots.
inline std::vector<Assignment> parb_witnesses(const Graph& g) {
  auto [r, r1] = mip::default_roots(g);
  auto dg = mip::build_digraph(g, r, r1);
  std::vector<Assignment> out;
  const int n = g.order();
  for (std::uint32_t c = 1; c < (1u << n); ++c) {
    VertexSet cover(n);
    for (int v = 0; v < n; ++v)
      if (c >> v & 1) cover.insert(v);
    try {
      out.push_back(mip::parb_assignment(dg, cover, mip::witness_parb(g, cover, r, r1)));
    } catch (const std::exception&) {
    }
  }
  return out;
}

}  // namespace cvc::testing
