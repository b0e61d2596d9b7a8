#include "cvc/random.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cvc/errors.hpp"

namespace cvc {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto& s : s_) s = splitmix64(seed);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

Graph gnp_random(int n, double p, std::uint64_t seed) {
  check_probability(p);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform() < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

BipartiteGraph bipartite_random(int n1, int n2, double p, std::uint64_t seed) {
  check_probability(p);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v)
      if (rng.uniform() < p) edges.emplace_back(u, n1 + v);
  BipartiteGraph out{Graph::from_edges(n1 + n2, edges), VertexSet(n1 + n2)};
  for (int u = 0; u < n1; ++u) out.left.insert(u);
  return out;
}

std::vector<CorpusGraph> connected_corpus(const CorpusOptions& opts) {
  if (opts.min_n < 1 || opts.max_n < opts.min_n) throw InputError("bad corpus size range");
  if (opts.gnp_densities.empty() || opts.bipartite_densities.empty())
    throw InputError("corpus density lists must be non-empty");
  Rng rng(opts.seed);
  std::vector<CorpusGraph> corpus;
  corpus.reserve(opts.count);
  for (int i = 0; i < opts.count; ++i) {
    const bool bip = (i % 2) == 1 && opts.min_n >= 2;
    const int n = opts.min_n + static_cast<int>(rng.below(opts.max_n - opts.min_n + 1));
    auto densities = bip ? opts.bipartite_densities : opts.gnp_densities;
    std::sort(densities.begin(), densities.end());
    std::size_t k = rng.below(densities.size());
    std::uint64_t seed = rng.next() >> 16;

    CorpusGraph entry;
    entry.family = bip ? "bipartite" : "gnp";
    for (bool found = false; !found;) {
      const double p = densities[k];
      for (int attempt = 0; attempt < opts.reseed_budget; ++attempt, ++seed) {
        Graph g = bip ? bipartite_random(n / 2, n - n / 2, p, seed).graph : gnp_random(n, p, seed);
        if (is_connected(g)) {
          entry.graph = std::move(g);
          entry.p = p;
          entry.seed = seed;
          found = true;
          break;
        }
      }
      // n >= 2 connected bipartite / G(n, 1) always exist, so this terminates
      // once the largest density is reached, provided it is positive.
      if (!found && k + 1 < densities.size()) ++k;
      else if (!found && densities[k] <= 0.0) throw InputError("corpus density list cannot yield connected graphs");
    }
    std::ostringstream name;
    name << entry.family << "_n" << n << "_p" << entry.p << "_s" << entry.seed;
    entry.name = name.str();
    corpus.push_back(std::move(entry));
  }
  return corpus;
}

}  // namespace cvc
