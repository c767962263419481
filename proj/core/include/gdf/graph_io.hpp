#pragma once

#include <string>
#include <string_view>

#include "gdf/graph.hpp"

namespace gdf {

/// DIMACS-style text: `c` comment lines, one `p edge <n> <m>` header, then m
/// lines `e <u> <v>` with 1-based endpoints. Blank lines are ignored.
/// Throws ParseError naming the offending line.
Graph parse_graph(std::string_view text);

/// Emits the header and edges sorted lexicographically, one per line.
std::string serialize_graph(const Graph& g);

}  // namespace gdf
