#pragma once

#include <cstdint>
#include <vector>

#include "gdf/graph.hpp"

namespace gdf {

/// Closed integer interval [left, right].
struct Interval {
  std::int64_t left;
  std::int64_t right;
};

/// Uniform random recursive tree, relabelled by a random permutation.
Graph gen_random_tree(std::size_t n, std::uint64_t seed);

/// n closed intervals with integer endpoints drawn from [0, 4n].
std::vector<Interval> gen_random_intervals(std::size_t n, std::uint64_t seed);

/// Intersection graph of `intervals` (touching endpoints are adjacent).
Graph interval_graph(const std::vector<Interval>& intervals);

Graph gen_random_interval_graph(std::size_t n, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
Graph gen_random_graph(std::size_t n, double edge_probability, std::uint64_t seed);

}  // namespace gdf
