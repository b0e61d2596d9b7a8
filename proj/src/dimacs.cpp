#include "cvc/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "cvc/errors.hpp"

namespace cvc {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t lineno) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(lineno, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
  long long n = -1, m_declared = -1;
  std::set<Edge> edges;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(lineno, "duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw ParseError(lineno, "malformed header, expected 'p edge <n> <m>'");
      n = to_int(tok[2], lineno);
      m_declared = to_int(tok[3], lineno);
      if (n < 0 || m_declared < 0) throw ParseError(lineno, "negative count in header");
      continue;
    }
    if (tok[0] == "e") {
      if (n < 0) throw ParseError(lineno, "edge line before problem line");
      if (tok.size() != 3) throw ParseError(lineno, "malformed edge line");
      long long u = to_int(tok[1], lineno), v = to_int(tok[2], lineno);
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError(lineno, "vertex index out of range 1.." + std::to_string(n));
      if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
      Edge e{static_cast<int>(std::min(u, v) - 1), static_cast<int>(std::max(u, v) - 1)};
      if (!edges.insert(e).second && warnings)
        warnings->push_back("line " + std::to_string(lineno) + ": duplicate edge " +
                            std::to_string(u) + " " + std::to_string(v) + " ignored");
      continue;
    }
    throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
  }
  if (n < 0) throw ParseError(lineno, "missing problem line");
  if (warnings && static_cast<long long>(edges.size()) != m_declared)
    warnings->push_back("header declares " + std::to_string(m_declared) + " edges, found " +
                        std::to_string(edges.size()) + " distinct");
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(static_cast<int>(n), list);
}

std::string write_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges())
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

Graph read_dimacs_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dimacs(buf.str(), warnings);
}

}  // namespace cvc
