#include "doctest.h"

#include "cvc/bounds.hpp"
#include "cvc/errors.hpp"
#include "cvc/random.hpp"
#include "support/brute_force.hpp"
#include "support/graphs.hpp"

using namespace cvc;
using namespace cvc::testing;

namespace {

VertexSet random_subset(int n, Rng& rng) {
  VertexSet u(n);
  for (int v = 0; v < n; ++v)
    if (rng.uniform() < 0.7) u.insert(v);
  return u;
}

}  // namespace

TEST_CASE("greedy coloring examples") {
  CHECK(greedy_color_bound(complete(4), VertexSet(4)).color_count == 0);
  CHECK(greedy_color_bound(complete(4), VertexSet::full(4)).color_count == 1);
  const int c5 = greedy_color_bound(cycle(5), VertexSet::full(5)).color_count;
  CHECK(c5 >= 2);
  CHECK(c5 <= 3);
  CHECK(c5 >= alpha_exhaustive(cycle(5), VertexSet::full(5)));
  CHECK(greedy_color_bound(Graph(3), VertexSet::full(3)).color_count == 3);
}

TEST_CASE("greedy coloring is a clique partition bounding alpha") {
  Rng rng(11);
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int n = 1 + static_cast<int>(seed % 14);
    const double p = 0.1 + 0.1 * static_cast<double>(seed % 8);
    auto g = gnp_random(n, p, seed);
    auto u = random_subset(n, rng);
    auto b = greedy_color_bound(g, u);
    REQUIRE(b.color_count >= alpha_exhaustive(g, u));
    CHECK(colors_present(b.coloring, u) == b.color_count);
    for (int v = 0; v < n; ++v) {
      if (!u.contains(v)) {
        CHECK(b.coloring[v] == -1);
        continue;
      }
      CHECK(b.coloring[v] >= 0);
      CHECK(b.coloring[v] < b.color_count);
      for (int w = v + 1; w < n; ++w)
        if (u.contains(w) && b.coloring[w] == b.coloring[v]) CHECK(g.adjacent(v, w));
    }
    // Restricting a coloring to a subset still bounds the subset.
    auto sub = u & random_subset(n, rng);
    CHECK(colors_present(b.coloring, sub) >= alpha_exhaustive(g, sub));
    CHECK(alpha_exhaustive(g, sub) <= alpha_exhaustive(g, u));
  }
}

TEST_CASE("is_bipartite") {
  auto c4 = is_bipartite(cycle(4));
  REQUIRE(c4);
  CHECK(c4->left == VertexSet::of(4, {0, 2}));
  CHECK(c4->right == VertexSet::of(4, {1, 3}));
  CHECK_FALSE(is_bipartite(cycle(5)));
  auto k33 = is_bipartite(complete_bipartite(3, 3));
  REQUIRE(k33);
  CHECK(k33->left.size() == 3);
  CHECK(k33->right.size() == 3);
}

TEST_CASE("bipartite bound") {
  CHECK(bipartite_stable_bound(complete_bipartite(3, 3), VertexSet::full(6)) == 3);
  CHECK(bipartite_stable_bound(path(4), VertexSet::full(4)) == 2);
  CHECK(bipartite_stable_bound(complete(3), VertexSet::of(3, {0, 1})) == 1);
  CHECK_THROWS_AS(bipartite_stable_bound(cycle(5), VertexSet::full(5)), ContractError);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = bipartite_random(8, 8, 0.3, seed).graph;
    CHECK(bipartite_stable_bound(g, VertexSet::full(16)) == alpha_exhaustive(g, VertexSet::full(16)));
  }
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n1 = 1 + static_cast<int>(seed % 7);
    const int n2 = 1 + static_cast<int>((seed / 7) % 7);
    auto g = bipartite_random(n1, n2, 0.15 + 0.1 * static_cast<double>(seed % 5), seed).graph;
    auto u = random_subset(n1 + n2, rng);
    REQUIRE(bipartite_stable_bound(g, u) == alpha_exhaustive(g, u));
    auto sides = is_bipartite(g);
    REQUIRE(sides);
    CHECK(bipartite_stable_bound(g, u, *sides) == alpha_exhaustive(g, u));
  }
}
