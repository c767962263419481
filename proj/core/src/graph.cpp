#include "gdf/graph.hpp"

#include <algorithm>
#include <string>

#include "gdf/error.hpp"

namespace gdf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return "input";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::NotNormalized: return "not-normalized";
    case ErrorKind::Structural: return "structural";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::NoOrder: return "no-order";
  }
  return "unknown";
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> deg(n, 0);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) {
      throw Error(ErrorKind::Input, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (a == b) throw Error(ErrorKind::Input, "self-loop at vertex " + std::to_string(a));
    ++deg[a];
    ++deg[b];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (auto [a, b] : edges) {
    targets_[cursor[a]++] = b;
    targets_[cursor[b]++] = a;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw Error(ErrorKind::Input, "duplicate edge (" + std::to_string(v) + "," +
                                        std::to_string(*dup) + ")");
    }
  }
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return Graph(n, e);
}

Graph Graph::edgeless(std::size_t n) { return Graph(n, {}); }

Graph Graph::path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::Input, "a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, e);
}

Graph Graph::star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex a = 0; a < vertex_count(); ++a)
    for (Vertex b : neighbors(a))
      if (a < b) out.emplace_back(a, b);
  return out;
}

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    throw Error(ErrorKind::Input, "vertex " + std::to_string(v) + " out of range");
  }
  auto nb = g.neighbors(v);
  std::vector<Vertex> out(nb.begin(), nb.end());
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

VertexMap VertexMap::identity(std::size_t n) {
  VertexMap m;
  m.forward.resize(n);
  for (Vertex v = 0; v < n; ++v) m.forward[v] = {v};
  return m;
}

EditResult add_pendants(const Graph& g, const std::map<Vertex, std::size_t>& requests) {
  const std::size_t n = g.vertex_count();
  auto edges = g.edges();
  EditResult out{Graph{}, VertexMap::identity(n)};
  auto next = static_cast<Vertex>(n);
  for (auto [anchor, count] : requests) {
    if (anchor >= n) throw Error(ErrorKind::Input, "pendant anchor " + std::to_string(anchor) + " out of range");
    for (std::size_t c = 0; c < count; ++c) {
      edges.emplace_back(anchor, next);
      out.map.created.push_back(next);
      ++next;
    }
  }
  out.graph = Graph(next, edges);
  return out;
}

EditResult replace_by_cliques(const Graph& g, std::span<const std::size_t> sizes) {
  const std::size_t n = g.vertex_count();
  if (sizes.size() != n) throw Error(ErrorKind::Input, "clique size vector does not match vertex count");
  VertexMap map = VertexMap::identity(n);
  auto next = static_cast<Vertex>(n);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t extra = 1; extra < sizes[v]; ++extra) {
      map.forward[v].push_back(next);
      map.created.push_back(next);
      ++next;
    }
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    const auto& clique = map.forward[v];
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b) edges.emplace_back(clique[a], clique[b]);
  }
  for (auto [a, b] : g.edges())
    for (Vertex x : map.forward[a])
      for (Vertex y : map.forward[b]) edges.emplace_back(x, y);
  return {Graph(next, edges), std::move(map)};
}

EditResult replace_by_clique(const Graph& g, Vertex v, std::size_t size) {
  if (v >= g.vertex_count()) throw Error(ErrorKind::Input, "vertex " + std::to_string(v) + " out of range");
  if (size == 0) throw Error(ErrorKind::Input, "clique replacement needs size >= 1");
  std::vector<std::size_t> sizes(g.vertex_count(), 1);
  sizes[v] = size;
  return replace_by_cliques(g, sizes);
}

}  // namespace gdf
