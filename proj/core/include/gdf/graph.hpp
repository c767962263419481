#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace gdf {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1, stored as CSR with
/// sorted neighbor lists. Edits return new graphs.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Throws gdf::Error(Input) on self-loops,
  /// duplicate edges, or out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges);

  static Graph complete(std::size_t n);
  static Graph edgeless(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph star(std::size_t leaves);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;
  bool adjacent(Vertex a, Vertex b) const;

  /// Edges with first < second, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// N[v] in ascending order. Throws on out-of-range v.
std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v);

/// Correspondence between the vertices of a graph and an edited copy.
/// `forward[v]` lists the images of original vertex v; `created` lists the
/// vertices that have no preimage (for pendants, grouped by anchor).
struct VertexMap {
  std::vector<std::vector<Vertex>> forward;
  std::vector<Vertex> created;

  static VertexMap identity(std::size_t n);
};

struct EditResult {
  Graph graph;
  VertexMap map;
};

/// Adds `count` degree-1 vertices hanging from each requested anchor. New
/// vertices are appended after the originals, anchors in ascending order.
EditResult add_pendants(const Graph& g, const std::map<Vertex, std::size_t>& requests);

/// Replaces v by a clique of `size` vertices, each joined to every former
/// neighbor of v. The first clique vertex keeps index v; the rest are
/// appended, so size == 1 is the identity.
EditResult replace_by_clique(const Graph& g, Vertex v, std::size_t size);

/// Simultaneous clique replacement. sizes[v] == 0 leaves v untouched (it is
/// not deleted); sizes[v] >= 1 behaves as replace_by_clique.
EditResult replace_by_cliques(const Graph& g, std::span<const std::size_t> sizes);

}  // namespace gdf
