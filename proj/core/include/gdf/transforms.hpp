#pragma once

#include "gdf/instance.hpp"
#include "gdf/labelled.hpp"
#include "gdf/value_map.hpp"

namespace gdf {

/// Domination/packing duality. Same graph and caps, k'(v) = u(N[v]) - k(v),
/// opposite sense; original optimum = u(V) - transformed optimum, and an
/// optimal g of the output lifts to u - g.
/// Requires k(v) <= u(N[v]) everywhere (guaranteed by normalize); throws
/// Error(NotNormalized) otherwise. Applying it twice gives back the input.
Reduction dualize(const GenInstance& inst);

/// Removes fixed labels from a canonical (I=0, d=1) labelling:
/// k0(v) = max(0, k(v) - t(N[v] minus free)), fixed labels become 0, and the
/// optimum shifts by t(V minus free). Throws Error(Unsupported) on
/// non-canonical input.
LabelledReduction eliminate_fixed_labels(const LabelledInstance& labelled);

/// Turns a Pack instance with caps in {0, levels} into an all-free one: each
/// zero-cap vertex gets a pendant with quota 0, and every cap becomes
/// `levels`. Optimum unchanged. Throws Error(Input) on wrong sense or caps.
Reduction free_reduction(const GenInstance& inst, Value levels);

/// Pack instance with unit caps to uniform quota k* = max k by hanging
/// k* - k(v) pendants on each v. original = transformed - sum(k* - k(v)).
/// Requires a normalized instance.
Reduction uniformize_packing(const GenInstance& inst);

/// Dominate instance with caps <= max_cap to one with caps in {0, 1}: every
/// vertex with u(v) > 0 becomes a clique of u(v) copies sharing quota k(v).
/// Optimum unchanged; the lift sums each clique.
Reduction flatten_capacities(const GenInstance& inst, Value max_cap);

}  // namespace gdf
