#pragma once

// Definition-literal reference computations. Nothing here calls into the
// solver, transform or ordering code it is used to check; only Graph and
// the plain instance containers are shared.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "gdf/graph.hpp"
#include "gdf/instance.hpp"
#include "gdf/labelled.hpp"

namespace gdf::oracle {

/// Plain loop over N[v].
Value closed_sum(const Graph& g, std::span<const Value> f, Vertex v);

/// f(v) in [0, u(v)] and the quota inequality at every vertex.
bool feasible(const GenInstance& inst, std::span<const Value> f);

/// Optimum by mixed-radix enumeration of all of [0,u(0)] x ... x [0,u(n-1)];
/// nullopt when no assignment is feasible. Only for tiny instances.
std::optional<Value> optimum(const GenInstance& inst);

/// Labelled valuation check: values in Y, fixed labels honoured, quota
/// inequality at every vertex.
bool labelled_feasible(const LabelledInstance& labelled, Sense sense, std::span<const Value> f);

/// Min (Dominate) or max (Pack) of f(V) over all labelled valuations.
std::optional<Value> labelled_optimum(const LabelledInstance& labelled, Sense sense);

/// Over vertex subsets S: min |S| with |N[v] ∩ S| >= demand(v), or max |S|
/// with |N[v] ∩ S| <= demand(v).
std::optional<Value> subset_optimum(const Graph& g, std::span<const Value> demand, Sense sense);

/// min f(V) over f: V -> {-1, 1} with f(N[v]) >= 1.
Value signed_domination_number(const Graph& g);
/// min f(V) over f: V -> {-1, 0, 1} with f(N[v]) >= 1.
Value minus_domination_number(const Graph& g);

/// Strong elimination ordering straight from the definition, with sets.
bool literal_strong_elimination(const Graph& g, std::span<const Vertex> order);
bool literal_max_neighborhood(const Graph& g, std::span<const Vertex> order);

/// Tries all n! orders.
bool has_strong_elimination_exhaustive(const Graph& g);

/// Independent search for a maximum-neighborhood ordering. Whether v can
/// go next depends only on the remaining vertex set, so dead sets are
/// memoized. Intended for n <= 16.
std::optional<std::vector<Vertex>> find_max_neighborhood(const Graph& g);

/// Every graph on n labelled vertices (2^(n choose 2) of them).
std::vector<Graph> all_graphs(std::size_t n);

/// One representative per rooted unlabelled tree on n vertices, from
/// canonical level sequences. Covers every unlabelled tree.
std::vector<Graph> all_rooted_trees(std::size_t n);

/// C_6 on 0..5 plus the triangle 0-2-4.
Graph three_sun();

/// Random quota and cap vectors with entries in [0, max_value].
GenInstance random_instance(const Graph& g, Sense sense, Value max_value, std::mt19937_64& rng);

/// Same, with Dominate quotas lowered to u(N[v]) so the instance is feasible.
GenInstance random_feasible_instance(const Graph& g, Sense sense, Value max_value, std::mt19937_64& rng);

}  // namespace gdf::oracle
