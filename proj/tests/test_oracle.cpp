#include "doctest.h"

#include "cvc/errors.hpp"
#include "cvc/oracle.hpp"
#include "cvc/random.hpp"
#include "support/brute_force.hpp"
#include "support/graphs.hpp"

using namespace cvc;
using namespace cvc::oracle;
using namespace cvc::testing;

TEST_CASE("check_cvc") {
  auto a = check_cvc(complete(3), VertexSet::of(3, {0, 1}));
  CHECK(a.is_cover);
  CHECK(a.is_connected_induced);
  auto b = check_cvc(path(5), VertexSet::of(5, {1, 3}));
  CHECK(b.is_cover);
  CHECK_FALSE(b.is_connected_induced);
  CHECK_FALSE(b.valid());
  CHECK_FALSE(check_cvc(cycle(4), VertexSet::of(4, {0})).is_cover);
  CHECK(check_cvc(star(4), VertexSet::of(5, {0})).valid());
  CHECK(check_cvc(Graph(1), VertexSet(1)).valid());
  CHECK_FALSE(check_cvc(complete(2), VertexSet(2)).valid());
}

TEST_CASE("brute_force_cvc examples") {
  CHECK(brute_force_cvc(complete_bipartite(3, 3)).size == 4);
  CHECK(brute_force_cvc(cycle(6)).size == 5);
  CHECK(brute_force_cvc(complete(2)).size == 1);
  CHECK(brute_force_cvc(star(6)).size == 1);
  CHECK(brute_force_cvc(Graph(1)).size == 0);
  CHECK_THROWS_AS(brute_force_cvc(Graph(0)), InputError);
  CHECK_THROWS_AS(brute_force_cvc(Graph(2)), InputError);
  CHECK_THROWS_AS(brute_force_cvc(path(21)), InputError);
  CHECK(brute_force_cvc(path(21), 21).size == 19);
}

TEST_CASE("brute_force_vc and is_interesting") {
  CHECK(brute_force_vc(complete_bipartite(4, 4)) == 4);
  CHECK(brute_force_vc(cycle(5)) == 3);
  CHECK(brute_force_vc(path(4)) == 2);
  CHECK(is_interesting(complete_bipartite(4, 4)));
  CHECK_FALSE(is_interesting(complete(4)));
  CHECK(is_interesting(path(5)));
}

TEST_CASE("oracle agrees with subset enumeration") {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 250; ++seed) {
    const int n = 1 + static_cast<int>(seed % 12);
    auto g = seed % 2 ? gnp_random(n, 0.3, seed) : bipartite_random(n / 2, n - n / 2, 0.4, seed).graph;
    if (n > 1 && !is_connected(g)) continue;
    ++checked;
    auto opt = brute_force_cvc(g);
    CAPTURE(seed);
    REQUIRE(opt.size == cvc_exhaustive(g));
    CHECK(opt.cover.size() == opt.size);
    CHECK(check_cvc(g, opt.cover).valid());
    const int vc = brute_force_vc(g);
    CHECK(vc == n - alpha_exhaustive(g, VertexSet::full(n)));
    CHECK(opt.size >= vc);
    CHECK(opt.size <= 2 * vc);
    CHECK(is_interesting(g) == (opt.size > vc));
  }
}
