#include "cvc/verify.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "cvc/bb.hpp"
#include "cvc/oracle.hpp"
#include "cvc/random.hpp"

namespace cvc {
namespace {

std::vector<CorpusGraph> corpus_for(const VerifyOptions& opts) {
  CorpusOptions c;
  c.count = opts.instances;
  c.min_n = opts.min_n;
  c.max_n = opts.max_n;
  c.seed = opts.seed;
  return connected_corpus(c);
}

void record_failure(SuiteResult& result, const CorpusGraph& entry, const std::string& why) {
  if (result.counterexample && result.counterexample->order() <= entry.graph.order()) return;
  result.passed = false;
  result.counterexample = entry.graph;
  result.detail = entry.name + ": " + why;
}

std::string set_text(const VertexSet& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  s.for_each([&](int v) {
    out << (first ? "" : ",") << v;
    first = false;
  });
  out << "}";
  return out.str();
}

}  // namespace

SuiteResult verify_parb_suite(const VerifyOptions& opts, const mip::ParbBuilder& builder) {
  SuiteResult result;
  result.suite = "parb";
  Rng rng(opts.seed ^ 0x5EEDULL);
  for (const auto& entry : corpus_for(opts)) {
    const Graph& g = entry.graph;
    ++result.instances;
    if (g.order() < 2) continue;
    std::vector<std::pair<int, int>> roots{mip::default_roots(g)};
    for (int k = 0; k < opts.random_root_pairs; ++k) {
      auto [u, v] = g.edges()[rng.below(g.size())];
      roots.emplace_back(rng.below(2) ? std::pair{u, v} : std::pair{v, u});
    }
    for (auto [r, r1] : roots) {
      if (auto bad = mip::find_parb_mismatch(g, r, r1, builder)) {
        std::ostringstream why;
        why << "roots (" << r << ", " << r1 << "), C = " << set_text(bad->subset)
            << (bad->is_cvc ? " is a CVC but has no model point"
                            : " is not a CVC but has a model point");
        record_failure(result, entry, why.str());
        break;
      }
    }
  }
  return result;
}

SuiteResult verify_pstp_suite(const VerifyOptions& opts) {
  SuiteResult result;
  result.suite = "pstp";
  for (const auto& entry : corpus_for(opts)) {
    ++result.instances;
    if (entry.graph.order() < 2) continue;
    if (auto bad = mip::find_pstp_mismatch(entry.graph))
      record_failure(result, entry, "model disagrees with the checker on C = " + set_text(*bad));
  }
  return result;
}

SuiteResult verify_bb_suite(const VerifyOptions& opts) {
  SuiteResult result;
  result.suite = "bb";
  std::vector<std::pair<std::string, SolverConfig>> modes;
  modes.emplace_back("default", SolverConfig{});
  SolverConfig c;
  c.use_russian_doll = true;
  modes.emplace_back("russian-doll", c);
  c = {};
  c.use_bipartite_bound = false;
  modes.emplace_back("no-bipartite-bound", c);
  c = {};
  c.coloring_reuse = false;
  modes.emplace_back("no-coloring-reuse", c);
  c = {};
  c.warm_start = false;
  modes.emplace_back("no-warm-start", c);

  for (const auto& entry : corpus_for(opts)) {
    ++result.instances;
    const int expected = oracle::brute_force_cvc(entry.graph).size;
    for (const auto& [label, cfg] : modes) {
      auto report = solve_cvc_bb(entry.graph, cfg);
      if (report.cover_size != expected) {
        record_failure(result, entry,
                       label + " found " + std::to_string(report.cover_size) + ", oracle " +
                           std::to_string(expected));
        break;
      }
    }
  }
  return result;
}

}  // namespace cvc
