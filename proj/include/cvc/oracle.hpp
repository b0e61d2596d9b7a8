#pragma once

#include "cvc/graph.hpp"

namespace cvc::oracle {

/// Exhaustive solvers refuse graphs above this many vertices by default.
inline constexpr int kDefaultCap = 20;

struct CvcCertificate {
  VertexSet cover;
  bool is_cover = false;
  /// G[cover] connected. A single vertex is connected; the empty set only
  /// when the graph has no edges.
  bool is_connected_induced = false;

  bool valid() const { return is_cover && is_connected_induced; }
};

/// Recomputes both properties from scratch.
CvcCertificate check_cvc(const Graph& g, const VertexSet& cover);

struct CvcOptimum {
  VertexSet cover;
  int size = 0;
};

/// Minimum connected vertex cover by enumerating stable sets S (branching on
/// the lowest undecided vertex) and keeping the largest one with G \ S
/// connected. Throws InputError if g is disconnected or above `cap`.
CvcOptimum brute_force_cvc(const Graph& g, int cap = kDefaultCap);

/// Minimum vertex cover size, n - alpha(G), by the same enumeration without
/// the connectivity requirement.
int brute_force_vc(const Graph& g, int cap = kDefaultCap);

/// Minimum CVC strictly larger than minimum VC.
bool is_interesting(const Graph& g, int cap = kDefaultCap);

}  // namespace cvc::oracle
