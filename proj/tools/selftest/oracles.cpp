#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_set>

namespace gdf::oracle {
namespace {

using VertexSet = std::set<Vertex>;

VertexSet closed_within(const Graph& g, Vertex v, const VertexSet& alive) {
  VertexSet out;
  if (alive.count(v)) out.insert(v);
  for (Vertex w : g.neighbors(v))
    if (alive.count(w)) out.insert(w);
  return out;
}

bool subset_of(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Calls fn(values) for every vector in [lo(0), hi(0)] x ... .
template <class Fn>
void for_each_vector(std::span<const Value> lo, std::span<const Value> hi, Fn&& fn) {
  const std::size_t n = lo.size();
  for (std::size_t v = 0; v < n; ++v)
    if (lo[v] > hi[v]) return;
  std::vector<Value> f(lo.begin(), lo.end());
  while (true) {
    fn(std::span<const Value>(f));
    std::size_t v = 0;
    while (v < n && f[v] == hi[v]) {
      f[v] = lo[v];
      ++v;
    }
    if (v == n) return;
    ++f[v];
  }
}

}  // namespace

Value closed_sum(const Graph& g, std::span<const Value> f, Vertex v) {
  Value s = f[v];
  for (Vertex w : g.neighbors(v)) s += f[w];
  return s;
}

bool feasible(const GenInstance& inst, std::span<const Value> f) {
  if (f.size() != inst.size()) return false;
  for (Vertex v = 0; v < inst.size(); ++v) {
    if (f[v] < 0 || f[v] > inst.cap(v)) return false;
    const Value s = closed_sum(inst.graph(), f, v);
    if (inst.sense() == Sense::Dominate ? s < inst.quota(v) : s > inst.quota(v)) return false;
  }
  return true;
}

std::optional<Value> optimum(const GenInstance& inst) {
  std::optional<Value> best;
  const std::vector<Value> lo(inst.size(), 0);
  for_each_vector(lo, inst.cap(), [&](std::span<const Value> f) {
    if (!feasible(inst, f)) return;
    const Value w = std::accumulate(f.begin(), f.end(), Value{0});
    if (!best || (inst.sense() == Sense::Dominate ? w < *best : w > *best)) best = w;
  });
  return best;
}

bool labelled_feasible(const LabelledInstance& labelled, Sense sense, std::span<const Value> f) {
  if (f.size() != labelled.size()) return false;
  for (Vertex v = 0; v < labelled.size(); ++v) {
    if (!labelled.in_range(f[v])) return false;
    if (labelled.label(v) && f[v] != *labelled.label(v)) return false;
    const Value s = closed_sum(labelled.graph(), f, v);
    if (sense == Sense::Dominate ? s < labelled.quota(v) : s > labelled.quota(v)) return false;
  }
  return true;
}

std::optional<Value> labelled_optimum(const LabelledInstance& labelled, Sense sense) {
  // Enumerate level indices j in [0, l] and map to I + j*d.
  const std::size_t n = labelled.size();
  std::vector<Value> lo(n, 0);
  std::vector<Value> hi(n, labelled.levels());
  for (Vertex v = 0; v < n; ++v) {
    if (labelled.label(v)) lo[v] = hi[v] = (*labelled.label(v) - labelled.base()) / labelled.step();
  }
  std::optional<Value> best;
  std::vector<Value> f(n);
  for_each_vector(lo, hi, [&](std::span<const Value> level) {
    for (Vertex v = 0; v < n; ++v) f[v] = labelled.base() + labelled.step() * level[v];
    if (!labelled_feasible(labelled, sense, f)) return;
    const Value w = std::accumulate(f.begin(), f.end(), Value{0});
    if (!best || (sense == Sense::Dominate ? w < *best : w > *best)) best = w;
  });
  return best;
}

std::optional<Value> subset_optimum(const Graph& g, std::span<const Value> demand, Sense sense) {
  const std::size_t n = g.vertex_count();
  std::optional<Value> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      Value hits = (mask >> v) & 1U;
      for (Vertex w : g.neighbors(v)) hits += (mask >> w) & 1U;
      ok = sense == Sense::Dominate ? hits >= demand[v] : hits <= demand[v];
    }
    if (!ok) continue;
    const auto size = static_cast<Value>(std::popcount(mask));
    if (!best || (sense == Sense::Dominate ? size < *best : size > *best)) best = size;
  }
  return best;
}

namespace {

Value min_weight_over(const Graph& g, std::span<const Value> alphabet) {
  const std::size_t n = g.vertex_count();
  std::vector<Value> lo(n, 0);
  std::vector<Value> hi(n, static_cast<Value>(alphabet.size()) - 1);
  std::optional<Value> best;
  std::vector<Value> f(n);
  for_each_vector(lo, hi, [&](std::span<const Value> idx) {
    for (Vertex v = 0; v < n; ++v) f[v] = alphabet[static_cast<std::size_t>(idx[v])];
    for (Vertex v = 0; v < n; ++v)
      if (closed_sum(g, f, v) < 1) return;
    const Value w = std::accumulate(f.begin(), f.end(), Value{0});
    if (!best || w < *best) best = w;
  });
  return *best;  // all-ones is always feasible
}

}  // namespace

Value signed_domination_number(const Graph& g) {
  const Value alphabet[] = {-1, 1};
  return min_weight_over(g, alphabet);
}

Value minus_domination_number(const Graph& g) {
  const Value alphabet[] = {-1, 0, 1};
  return min_weight_over(g, alphabet);
}

bool literal_strong_elimination(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    const VertexSet alive(order.begin() + static_cast<std::ptrdiff_t>(i), order.end());
    const VertexSet local = closed_within(g, order[i], alive);
    for (Vertex a : local)
      for (Vertex b : local)
        if (a != b && !g.adjacent(a, b)) return false;
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        if (!local.count(order[j]) || !local.count(order[k])) continue;
        if (!subset_of(closed_within(g, order[j], alive), closed_within(g, order[k], alive))) return false;
      }
    }
  }
  return true;
}

bool literal_max_neighborhood(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    const VertexSet alive(order.begin() + static_cast<std::ptrdiff_t>(i), order.end());
    const VertexSet local = closed_within(g, order[i], alive);
    const bool has_max = std::any_of(local.begin(), local.end(), [&](Vertex u) {
      const VertexSet big = closed_within(g, u, alive);
      return std::all_of(local.begin(), local.end(),
                         [&](Vertex w) { return subset_of(closed_within(g, w, alive), big); });
    });
    if (!has_max) return false;
  }
  return true;
}

bool has_strong_elimination_exhaustive(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  do {
    if (literal_strong_elimination(g, order)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

std::optional<std::vector<Vertex>> find_max_neighborhood(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::unordered_set<std::uint32_t> dead;
  std::vector<Vertex> order;

  auto has_max_neighbor = [&](Vertex v, std::uint32_t mask) {
    VertexSet alive;
    for (Vertex x = 0; x < n; ++x)
      if (mask >> x & 1U) alive.insert(x);
    const VertexSet local = closed_within(g, v, alive);
    return std::any_of(local.begin(), local.end(), [&](Vertex u) {
      const VertexSet big = closed_within(g, u, alive);
      return std::all_of(local.begin(), local.end(),
                         [&](Vertex w) { return subset_of(closed_within(g, w, alive), big); });
    });
  };

  auto search = [&](auto&& self, std::uint32_t mask) -> bool {
    if (mask == 0) return true;
    if (dead.count(mask)) return false;
    for (Vertex v = 0; v < n; ++v) {
      if (!(mask >> v & 1U) || !has_max_neighbor(v, mask)) continue;
      order.push_back(v);
      if (self(self, mask & ~(std::uint32_t{1} << v))) return true;
      order.pop_back();
    }
    dead.insert(mask);
    return false;
  };

  const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  if (search(search, full)) return order;
  return std::nullopt;
}

std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<Edge> slots;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1U) edges.push_back(slots[i]);
    out.emplace_back(n, edges);
  }
  return out;
}

std::vector<Graph> all_rooted_trees(std::size_t n) {
  std::vector<Graph> out;
  if (n == 0) return out;
  std::vector<std::size_t> level(n);
  std::iota(level.begin(), level.end(), std::size_t{1});
  while (true) {
    std::vector<Edge> edges;
    std::vector<Vertex> last_at(n + 2, 0);
    last_at[level[0]] = 0;
    for (Vertex i = 1; i < n; ++i) {
      edges.emplace_back(last_at[level[i] - 1], i);
      last_at[level[i]] = i;
    }
    out.emplace_back(n, edges);

    std::size_t p = n;
    for (std::size_t i = n; i-- > 0;) {
      if (level[i] > 2) {
        p = i;
        break;
      }
    }
    if (p == n) break;
    std::size_t q = p;
    while (level[q] != level[p] - 1) --q;
    for (std::size_t i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  return out;
}

Graph three_sun() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {2, 4}, {4, 0}};
  return Graph(6, edges);
}

GenInstance random_instance(const Graph& g, Sense sense, Value max_value, std::mt19937_64& rng) {
  std::uniform_int_distribution<Value> pick(0, max_value);
  std::vector<Value> k(g.vertex_count());
  std::vector<Value> u(g.vertex_count());
  for (auto& x : k) x = pick(rng);
  for (auto& x : u) x = pick(rng);
  return GenInstance(g, std::move(k), std::move(u), sense);
}

GenInstance random_feasible_instance(const Graph& g, Sense sense, Value max_value, std::mt19937_64& rng) {
  auto inst = random_instance(g, sense, max_value, rng);
  if (sense == Sense::Pack) return inst;
  std::vector<Value> k(inst.quota().begin(), inst.quota().end());
  for (Vertex v = 0; v < g.vertex_count(); ++v) k[v] = std::min(k[v], inst.cap_of_neighborhood(v));
  return GenInstance(g, std::move(k), std::vector<Value>(inst.cap().begin(), inst.cap().end()), sense);
}

}  // namespace gdf::oracle
