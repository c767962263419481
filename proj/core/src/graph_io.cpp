#include "gdf/graph_io.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "gdf/error.hpp"
#include "text_util.hpp"

namespace gdf {

Graph parse_graph(std::string_view text) {
  std::optional<std::size_t> n;
  std::size_t declared_edges = 0;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  detail::for_each_line(text, [&](std::size_t lineno, const std::vector<std::string>& tok) {
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "p") {
      if (n) throw ParseError(lineno, "second problem line");
      if (tok.size() != 4 || tok[1] != "edge") throw ParseError(lineno, "expected `p edge <n> <m>`");
      n = detail::parse_count(tok[2], lineno);
      declared_edges = detail::parse_count(tok[3], lineno);
      header_line = lineno;
      return;
    }
    if (tok[0] == "e") {
      if (!n) throw ParseError(lineno, "edge before `p edge` line");
      if (tok.size() != 3) throw ParseError(lineno, "expected `e <u> <v>`");
      auto a = detail::parse_vertex(tok[1], *n, lineno);
      auto b = detail::parse_vertex(tok[2], *n, lineno);
      if (a == b) throw ParseError(lineno, "self-loop");
      Edge key{std::min(a, b), std::max(a, b)};
      if (!seen.insert(key).second) throw ParseError(lineno, "duplicate edge");
      edges.push_back(key);
      return;
    }
    throw ParseError(lineno, "unrecognized line `" + tok[0] + "`");
  });

  if (!n) throw ParseError(1, "missing `p edge <n> <m>` line");
  if (edges.size() != declared_edges) {
    throw ParseError(header_line, "header declares " + std::to_string(declared_edges) +
                                      " edges but " + std::to_string(edges.size()) + " were given");
  }
  return Graph(*n, edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [a, b] : g.edges()) out << "e " << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

}  // namespace gdf
