#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvc/graph.hpp"

namespace cvc {

/// Portable deterministic generator.
///
/// Seeding: the 64-bit seed drives a splitmix64 sequence
///   s += 0x9E3779B97F4A7C15; z = s;
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
///   out = z ^ (z >> 31)
/// whose first four outputs form the xoshiro256** state. Each draw is the
/// standard xoshiro256** output rotl(s1 * 5, 7) * 9 followed by the usual
/// state update. uniform() maps a draw x to (x >> 11) * 2^-53, in [0, 1).
/// Output is bit-identical on every platform for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  double uniform();
  /// Uniform integer in [0, bound), by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t s_[4];
};

/// G(n, p): pairs (u, v), u < v, are visited in lexicographic order and each
/// becomes an edge iff the next uniform() draw is < p.
Graph gnp_random(int n, double p, std::uint64_t seed);

struct BipartiteGraph {
  Graph graph;
  VertexSet left;  // vertices 0..n1-1; the right side is n1..n1+n2-1
};

/// Random bipartite graph: for u in the left side and v in the right side,
/// both in increasing order, (u, v) becomes an edge iff uniform() < p.
BipartiteGraph bipartite_random(int n1, int n2, double p, std::uint64_t seed);

/// One entry of a seeded corpus of connected instances.
struct CorpusGraph {
  std::string name;
  std::string family;  // "gnp" or "bipartite"
  double p = 0;
  std::uint64_t seed = 0;  // generator seed actually used
  Graph graph;
};

struct CorpusOptions {
  int count = 100;
  int min_n = 4;
  int max_n = 14;
  std::uint64_t seed = 0;
  std::vector<double> gnp_densities{0.2, 0.3, 0.4, 0.5, 0.6};
  std::vector<double> bipartite_densities{0.1, 0.2, 0.3, 0.4, 0.5};
  /// Attempts per density before moving to the next larger listed density.
  int reseed_budget = 2000;
};

/// Alternates G(n, p) and bipartite (n1 = n / 2) instances with n drawn
/// uniformly from [min_n, max_n] and p from the family's density list. Each
/// instance is reseeded by +1 steps until connected; when the budget runs out
/// the next larger density from the list is tried.
std::vector<CorpusGraph> connected_corpus(const CorpusOptions& opts);

}  // namespace cvc
