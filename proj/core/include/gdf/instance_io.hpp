#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gdf/instance.hpp"
#include "gdf/labelled.hpp"
#include "gdf/orderings.hpp"
#include "gdf/value_map.hpp"

namespace gdf {

// Instance text: a graph block (see graph_io.hpp) followed by
//   k default <int>      u default <int>
//   k <v> <int>          u <v> <int>        (1-based v, overrides default)
//   sense dominate|pack
// Lines starting with `c` or `#` are comments.
GenInstance parse_instance(std::string_view text);

/// Canonical form: graph block, then for k and u the most frequent value as
/// the default (smallest on ties) plus one line per differing vertex, then
/// the sense line. parse(serialize(x)) == x.
std::string serialize_instance(const GenInstance& inst);

// Labelled text: a graph block followed by
//   labelled <I> <d> <l>
//   t default F|<int>    t <v> F|<int>
//   k default <int>      k <v> <int>
//   sense dominate|pack  (optional; defaults to dominate)
struct ParsedLabelled {
  LabelledInstance instance;
  Sense sense;
};
ParsedLabelled parse_labelled(std::string_view text);
std::string serialize_labelled(const LabelledInstance& labelled, Sense sense);

/// `order <v_1> ... <v_n>` with 1-based vertices. Checks it is a
/// permutation of n vertices.
EliminationOrder parse_order(std::string_view text, std::size_t n, OrderKind kind);
std::string serialize_order(const EliminationOrder& order);

/// `# valuemap scale=<s> offset=<o> flip=<0|1>`
std::string value_map_header(const ValueMap& map);
/// First valuemap header in `text`, if any.
std::optional<ValueMap> parse_value_map_header(std::string_view text);

/// True if the text carries a `sense` or `labelled` line, i.e. it is more
/// than a bare graph.
bool looks_like_instance(std::string_view text);

/// Graph block of a graph, instance or labelled file.
Graph parse_graph_block(std::string_view text);

}  // namespace gdf
