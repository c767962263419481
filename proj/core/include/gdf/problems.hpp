#pragma once

#include <span>
#include <vector>

#include "gdf/instance.hpp"
#include "gdf/labelled.hpp"
#include "gdf/value_map.hpp"

namespace gdf {

// Classical problems as (k, u) instances. All of these are exact
// encodings: the optimum of the returned instance is the classical value.

GenInstance from_domination(const Graph& g);
GenInstance from_two_packing(const Graph& g);
/// k-tuple domination: |N[v] ∩ D| >= k for every v.
GenInstance from_k_tuple(const Graph& g, Value k);
/// k-limited packing: |N[v] ∩ B| <= k for every v.
GenInstance from_limited_packing(const Graph& g, Value k);
/// {k}-dominating / {k}-packing functions: f: V -> [0, k], f(N[v]) >= k / <= k.
GenInstance from_braces_k(const Graph& g, Value k, Sense sense);
/// Fault tolerant domination with per-vertex demand.
GenInstance from_fault_tolerant(const Graph& g, std::vector<Value> demand);
/// Generalized limited packing: B ⊆ allowed, |N[v] ∩ B| <= k(v).
GenInstance from_generalized_limited_packing(const Graph& g, std::vector<Value> quota,
                                             const std::vector<bool>& allowed);

/// Canonical form of a labelled instance as a (k, u) instance with
/// u(v) in {0, l}. Dominate accepts any labelling: labels and quotas are
/// rescaled to Y = [0, l] with k*(v) = ceil((k(v) - I(deg(v)+1)) / d), then
/// fixed labels are eliminated. The value map is
///   original = d * (transformed + t*(fixed)) + I * n,
/// and the lift returns a labelled valuation (values in Y).
/// Pack requires I = 0, d = 1 and labels in {0, free}; anything else throws
/// Error(Unsupported).
Reduction from_labelled(const LabelledInstance& labelled, Sense sense);

/// M-domination: required vertices (label 1) plus quota k, values in {0,1}.
Reduction from_mdom(const Graph& g, std::vector<Value> quota, const std::vector<bool>& required);

/// Signed domination (f: V -> {-1,1}, f(N[v]) >= 1). Output has
/// k(v) = 1 + ceil(deg(v)/2), u = 1; signed weight = 2 * f(V) - n.
Reduction from_signed(const Graph& g);

/// Minus domination (f: V -> {-1,0,1}, f(N[v]) >= 1). Output has
/// k(v) = 2 + deg(v), u = 2; minus weight = f(V) - n.
Reduction from_minus(const Graph& g);

/// Canonical labelled instance with labels in {0, free} as a (k, u)
/// instance: u = 0 on fixed vertices, l on free ones. Negative Dominate
/// quotas are clamped to 0 (they constrain nothing).
GenInstance labelled_as_instance(const LabelledInstance& labelled, Sense sense);

}  // namespace gdf
