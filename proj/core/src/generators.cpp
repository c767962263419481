#include "gdf/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gdf/error.hpp"

namespace gdf {
namespace {

void require_positive(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Input, "generator needs n >= 1");
}

}  // namespace

Graph gen_random_tree(std::size_t n, std::uint64_t seed) {
  require_positive(n);
  std::mt19937_64 rng(seed);
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    edges.emplace_back(label[parent(rng)], label[v]);
  }
  return Graph(n, edges);
}

std::vector<Interval> gen_random_intervals(std::size_t n, std::uint64_t seed) {
  require_positive(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> endpoint(0, static_cast<std::int64_t>(4 * n));
  std::vector<Interval> out(n);
  for (auto& iv : out) {
    std::int64_t a = endpoint(rng);
    std::int64_t b = endpoint(rng);
    iv = {std::min(a, b), std::max(a, b)};
  }
  return out;
}

Graph interval_graph(const std::vector<Interval>& intervals) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < intervals.size(); ++a)
    for (Vertex b = a + 1; b < intervals.size(); ++b)
      if (intervals[a].left <= intervals[b].right && intervals[b].left <= intervals[a].right)
        edges.emplace_back(a, b);
  return Graph(intervals.size(), edges);
}

Graph gen_random_interval_graph(std::size_t n, std::uint64_t seed) {
  return interval_graph(gen_random_intervals(n, seed));
}

Graph gen_random_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
  require_positive(n);
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw Error(ErrorKind::Input, "edge probability must lie in [0,1]");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return Graph(n, edges);
}

}  // namespace gdf
