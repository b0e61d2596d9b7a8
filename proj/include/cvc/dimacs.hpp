#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cvc/graph.hpp"

namespace cvc {

/// Reads the DIMACS edge format: `c` comment lines, one `p edge n m` header
/// (`p col` is accepted as a synonym), then `e u v` lines with 1-based
/// vertices. Duplicate edges collapse to one; each collapse and a final edge
/// count that disagrees with the header are reported through `warnings`.
/// Throws ParseError naming the offending line.
Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// `p edge n m` followed by `e u v` lines in lexicographic order, 1-based,
/// LF-terminated. parse_dimacs(write_dimacs(g)) == g.
std::string write_dimacs(const Graph& g);

Graph read_dimacs_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

}  // namespace cvc
