#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "gdf/instance.hpp"
#include "gdf/orderings.hpp"

namespace gdf {

struct GreedyResult {
  Assignment assignment;
  /// Sum of |N[v_i]| over the steps, i.e. n + 2m.
  std::uint64_t neighborhood_touches = 0;
};

/// Called after step i (0-based) with the partial valuation f^(i).
using GreedyObserver = std::function<void(std::size_t step, std::span<const Value> partial)>;

/// Exact maximum for a Pack instance along a strong elimination ordering, in
/// O(n + m). Vertices are visited in order and v_i receives
///   min{ u(v_i), min over w in N[v_i] of k(w) - f(N[w]) }
/// where f(N[w]) is a running per-vertex sum. Throws Error(Input) for a
/// Dominate instance and Error(Structural) if `order` was certified for a
/// different graph or is not a strong elimination ordering.
GreedyResult greedy_packing(const GenInstance& inst, const CertifiedOrder& order,
                            const GreedyObserver& observer = {});
GreedyResult greedy_packing(const GenInstance& inst, const EliminationOrder& order);

/// Exact minimum for a Dominate instance: dualize, run greedy_packing on the
/// packing dual, return u - f. Throws InfeasibleError if some k(v) > u(N[v]).
GreedyResult solve_domination_strongly_chordal(const GenInstance& inst, const CertifiedOrder& order);
GreedyResult solve_domination_strongly_chordal(const GenInstance& inst, const EliminationOrder& order);

struct OracleOptions {
  /// Maximum number of (vertex, value) trials before refusing.
  std::uint64_t budget = 10'000'000;
};

struct OracleResult {
  Assignment assignment;
  Value optimum = 0;
  std::uint64_t nodes = 0;
};

/// Exhaustive search over 0 <= f(v) <= u(v) in lexicographic order with
/// pruning; returns the lexicographically smallest optimal f. Throws
/// Error(Budget) instead of approximating and InfeasibleError for
/// infeasible Dominate instances.
OracleResult brute_force(const GenInstance& inst, const OracleOptions& options = {});

enum class Method { Greedy, Oracle };
std::string_view to_string(Method m) noexcept;

struct SolveOptions {
  bool force_oracle = false;
  OracleOptions oracle;
  FinderOptions finder;
};

struct Solution {
  Assignment assignment;
  Value optimum = 0;
  Method method = Method::Greedy;
  std::optional<EliminationOrder> order;  // the order the greedy path used
};

/// Greedy path when an order is supplied or can be found, brute force
/// otherwise. A supplied order that fails verification is an error, not a
/// fallback.
Solution solve(const GenInstance& inst, const std::optional<EliminationOrder>& order = std::nullopt,
               const SolveOptions& options = {});

}  // namespace gdf
