#include "gdf/orderings.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "gdf/error.hpp"

namespace gdf {
namespace {

constexpr std::size_t kUnplaced = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> positions_of(const EliminationOrder& order, std::size_t n) {
  order.require_permutation(n);
  std::vector<std::size_t> pos(n);
  for (std::size_t p = 0; p < n; ++p) pos[order.order[p]] = p;
  return pos;
}

/// Scratch marker with O(1) reset.
class Marker {
 public:
  explicit Marker(std::size_t n) : stamp_(n, 0) {}
  void next() { ++current_; }
  void mark(Vertex v) { stamp_[v] = current_; }
  bool marked(Vertex v) const { return stamp_[v] == current_; }

 private:
  std::vector<std::uint64_t> stamp_;
  std::uint64_t current_ = 1;
};

/// N_{G_i}[y] ⊆ N_{G_i}[z], where G_i keeps vertices with pos >= floor.
bool nested(const Graph& g, const std::vector<std::size_t>& pos, std::size_t floor, Vertex y, Vertex z,
            Marker& marker) {
  if (y == z) return true;
  marker.next();
  marker.mark(z);
  for (Vertex w : g.neighbors(z))
    if (pos[w] >= floor) marker.mark(w);
  if (!marker.marked(y)) return false;
  for (Vertex w : g.neighbors(y))
    if (pos[w] >= floor && !marker.marked(w)) return false;
  return true;
}

/// N_{G_i}[v_i] as order positions, ascending.
std::vector<std::size_t> local_positions(const Graph& g, const std::vector<std::size_t>& pos, Vertex x) {
  const std::size_t i = pos[x];
  std::vector<std::size_t> out{i};
  for (Vertex w : g.neighbors(x))
    if (pos[w] > i) out.push_back(pos[w]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string_view to_string(OrderKind kind) noexcept {
  return kind == OrderKind::StrongElimination ? "strong" : "maxnbr";
}

void EliminationOrder::require_permutation(std::size_t n) const {
  if (order.size() != n) {
    throw Error(ErrorKind::Input, "order lists " + std::to_string(order.size()) + " vertices, graph has " +
                                      std::to_string(n));
  }
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v >= n || seen[v]) throw Error(ErrorKind::Input, "order is not a permutation of the vertices");
    seen[v] = 1;
  }
}

std::string OrderViolation::describe(const EliminationOrder& order) const {
  std::ostringstream s;
  const auto& o = order.order;
  if (order.kind == OrderKind::MaxNeighborhood) {
    s << "position " << i + 1 << " (vertex " << o[i] + 1 << ") has no maximum neighbor in G_" << i + 1;
  } else if (not_simplicial) {
    s << "vertex " << o[i] + 1 << " at position " << i + 1 << " is not simplicial in G_" << i + 1
      << ": neighbors " << o[j] + 1 << " and " << o[k] + 1 << " are not adjacent";
  } else {
    s << "triple (" << i + 1 << "," << j + 1 << "," << k + 1 << "): N[" << o[j] + 1 << "] is not contained in N["
      << o[k] + 1 << "] within G_" << i + 1;
  }
  return s.str();
}

OrderCheck verify_strong_elimination(const Graph& g, const EliminationOrder& order) {
  const std::size_t n = g.vertex_count();
  const auto pos = positions_of(order, n);
  Marker marker(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto local = local_positions(g, pos, order.order[i]);
    for (std::size_t a = 0; a < local.size(); ++a) {
      for (std::size_t b = a + 1; b < local.size(); ++b) {
        const Vertex y = order.order[local[a]];
        const Vertex z = order.order[local[b]];
        if (!nested(g, pos, i, y, z, marker)) {
          return {OrderViolation{i, local[a], local[b], !g.adjacent(y, z)}};
        }
      }
    }
  }
  return {};
}

OrderCheck verify_max_neighborhood(const Graph& g, const EliminationOrder& order) {
  const std::size_t n = g.vertex_count();
  const auto pos = positions_of(order, n);
  Marker marker(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto local = local_positions(g, pos, order.order[i]);
    bool found = false;
    for (std::size_t c : local) {
      const Vertex u = order.order[c];
      found = std::all_of(local.begin(), local.end(), [&](std::size_t w) {
        return nested(g, pos, i, order.order[w], u, marker);
      });
      if (found) break;
    }
    if (!found) return {OrderViolation{i, i, i, false}};
  }
  return {};
}

namespace {

std::uint64_t fingerprint(const Graph& g) noexcept {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    mix(g.degree(v));
    for (Vertex w : g.neighbors(v)) mix(w);
  }
  return h;
}

}  // namespace

bool CertifiedOrder::certifies(const Graph& g) const noexcept {
  return g.vertex_count() == order_.size() && fingerprint(g) == fingerprint_;
}

CertifiedOrder certify(const Graph& g, EliminationOrder order) {
  const auto check = order.kind == OrderKind::StrongElimination ? verify_strong_elimination(g, order)
                                                                 : verify_max_neighborhood(g, order);
  if (!check) {
    throw Error(ErrorKind::Structural,
                std::string(to_string(order.kind)) + " ordering rejected: " + check.violation->describe(order));
  }
  return CertifiedOrder(std::move(order.order), order.kind, fingerprint(g));
}

namespace {

class StrongOrderSearch {
 public:
  StrongOrderSearch(const Graph& g, std::uint64_t budget)
      : g_(g), n_(g.vertex_count()), budget_(budget), pos_(n_, kUnplaced), remaining_degree_(n_), marker_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      remaining_degree_[v] = g.degree(v);
      pool_.emplace(remaining_degree_[v], v);
    }
  }

  std::optional<std::vector<Vertex>> run() {
    // frames_[d] holds the last candidate key tried at depth d.
    std::vector<std::optional<Key>> frames{std::nullopt};
    while (true) {
      if (order_.size() == n_) return order_;
      auto& last = frames.back();
      auto it = last ? pool_.upper_bound(*last) : pool_.begin();
      bool placed = false;
      for (; it != pool_.end(); ++it) {
        if (budget_ && nodes_ >= budget_) return std::nullopt;
        ++nodes_;
        const Key key = *it;
        if (admissible(key.second)) {
          last = key;
          place(key.second);
          frames.emplace_back(std::nullopt);
          placed = true;
          break;
        }
      }
      if (placed) continue;
      frames.pop_back();
      if (frames.empty()) return std::nullopt;
      unplace();
    }
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  bool exhausted_budget() const noexcept { return budget_ && nodes_ >= budget_; }

 private:
  using Key = std::pair<std::size_t, Vertex>;

  /// Placing x next must satisfy every triple (i, pos(x), k) with v_k still
  /// unplaced: N_{G_i}[x] ⊆ N_{G_i}[v_k] whenever both sit in N_{G_i}[v_i].
  bool admissible(Vertex x) {
    const std::size_t p = order_.size();
    pos_[x] = p;
    bool ok = check_anchor(x, x);
    for (Vertex a : g_.neighbors(x)) {
      if (!ok) break;
      if (pos_[a] < p) ok = check_anchor(a, x);
    }
    ok = ok && simple(x, p);
    pos_[x] = kUnplaced;
    return ok;
  }

  /// Later neighbors of v_i must have nested neighborhoods in G_i, whatever
  /// order they end up in; rejecting x here saves the whole subtree.
  bool simple(Vertex x, std::size_t p) {
    scratch_.clear();
    for (Vertex y : g_.neighbors(x))
      if (pos_[y] == kUnplaced) scratch_.push_back(y);
    for (std::size_t a = 0; a < scratch_.size(); ++a) {
      for (std::size_t b = a + 1; b < scratch_.size(); ++b) {
        if (!nested(g_, pos_, p, scratch_[a], scratch_[b], marker_) &&
            !nested(g_, pos_, p, scratch_[b], scratch_[a], marker_))
          return false;
      }
    }
    return true;
  }

  bool check_anchor(Vertex anchor, Vertex x) {
    const std::size_t i = pos_[anchor];
    for (Vertex y : g_.neighbors(anchor)) {
      if (y == x || pos_[y] != kUnplaced) continue;
      if (!nested(g_, pos_, i, x, y, marker_)) return false;
    }
    return true;
  }

  void place(Vertex x) {
    pool_.erase({remaining_degree_[x], x});
    pos_[x] = order_.size();
    order_.push_back(x);
    for (Vertex w : g_.neighbors(x)) {
      if (pos_[w] != kUnplaced) continue;
      pool_.erase({remaining_degree_[w], w});
      --remaining_degree_[w];
      pool_.emplace(remaining_degree_[w], w);
    }
  }

  void unplace() {
    const Vertex x = order_.back();
    order_.pop_back();
    pos_[x] = kUnplaced;
    for (Vertex w : g_.neighbors(x)) {
      if (pos_[w] != kUnplaced) continue;
      pool_.erase({remaining_degree_[w], w});
      ++remaining_degree_[w];
      pool_.emplace(remaining_degree_[w], w);
    }
    pool_.emplace(remaining_degree_[x], x);
  }

  const Graph& g_;
  std::size_t n_;
  std::uint64_t budget_;  // 0 = unlimited
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> remaining_degree_;
  std::set<Key> pool_;
  std::vector<Vertex> order_;
  std::vector<Vertex> scratch_;
  Marker marker_;
};

}  // namespace

FinderResult find_strong_elimination(const Graph& g, const FinderOptions& options) {
  const std::size_t n = g.vertex_count();
  const bool exhaustive = n <= options.exhaustive_cap;
  StrongOrderSearch search(g, exhaustive ? 0 : options.node_budget + n);
  auto order = search.run();
  FinderResult result;
  result.nodes = search.nodes();
  result.exhaustive = exhaustive || !search.exhausted_budget();
  if (order) result.order = EliminationOrder{std::move(*order), OrderKind::StrongElimination};
  return result;
}

}  // namespace gdf
