#pragma once

#include <initializer_list>
#include <numeric>
#include <vector>

#include "gdf/graph.hpp"
#include "gdf/orderings.hpp"

namespace gdf::testing {

inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Graph(n, list);
}

inline EliminationOrder natural_order(std::size_t n, OrderKind kind = OrderKind::StrongElimination) {
  EliminationOrder o{std::vector<Vertex>(n), kind};
  std::iota(o.order.begin(), o.order.end(), Vertex{0});
  return o;
}

inline EliminationOrder order_of(std::initializer_list<Vertex> vs, OrderKind kind = OrderKind::StrongElimination) {
  return EliminationOrder{std::vector<Vertex>(vs), kind};
}

}  // namespace gdf::testing
