#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cvc/graph.hpp"
#include "cvc/mip.hpp"

namespace cvc {

/// Seeded self-checks over a corpus of small connected graphs.
struct VerifyOptions {
  int min_n = 2;
  int max_n = 8;
  int instances = 100;
  std::uint64_t seed = 42;
  /// Extra (r, r1) pairs tried per graph besides default_roots.
  int random_root_pairs = 5;
};

struct SuiteResult {
  std::string suite;
  int instances = 0;
  bool passed = true;
  /// Smallest failing instance, if any.
  std::optional<Graph> counterexample;
  std::string detail;
};

/// Formulation/CVC equivalence of the two-root arborescence model on every
/// subset of every corpus graph, for default and random root pairs.
SuiteResult verify_parb_suite(const VerifyOptions& opts,
                              const mip::ParbBuilder& builder = mip::build_parb);

/// Same equivalence for the subtour formulation.
SuiteResult verify_pstp_suite(const VerifyOptions& opts);

/// Branch and bound (plain, Russian doll, and each bound switch turned off)
/// against the exhaustive oracle.
SuiteResult verify_bb_suite(const VerifyOptions& opts);

}  // namespace cvc
