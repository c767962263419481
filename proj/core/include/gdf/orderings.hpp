#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdf/graph.hpp"

namespace gdf {

enum class OrderKind { StrongElimination, MaxNeighborhood };

std::string_view to_string(OrderKind kind) noexcept;

/// A vertex sequence (v_1, ..., v_n) with the structure it claims to
/// certify. G_i below is the subgraph induced by v_i, ..., v_n.
struct EliminationOrder {
  std::vector<Vertex> order;
  OrderKind kind = OrderKind::StrongElimination;

  /// Throws Error(Input) unless `order` is a permutation of 0..n-1.
  void require_permutation(std::size_t n) const;
};

/// Positions (0-based) in the order. For strong elimination, (i, j, k) with
/// i <= j <= k names v_j, v_k in N_{G_i}[v_i] whose neighborhoods in G_i are
/// not nested; j != k and v_j, v_k non-adjacent means v_i is not simplicial.
/// For maximum neighborhoods only `i` is meaningful.
struct OrderViolation {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  bool not_simplicial;

  std::string describe(const EliminationOrder& order) const;
};

struct OrderCheck {
  std::optional<OrderViolation> violation;
  explicit operator bool() const noexcept { return !violation; }
};

/// Reports the lexicographically first violating (i, j, k).
OrderCheck verify_strong_elimination(const Graph& g, const EliminationOrder& order);

/// Every v_i has u in N_{G_i}[v_i] with N_{G_i}[w] ⊆ N_{G_i}[u] for all
/// w in N_{G_i}[v_i]. Reports the first i that has none.
OrderCheck verify_max_neighborhood(const Graph& g, const EliminationOrder& order);

/// An order that has passed verification for a specific graph. Solvers take
/// this instead of a raw order.
class CertifiedOrder {
 public:
  const std::vector<Vertex>& order() const noexcept { return order_; }
  OrderKind kind() const noexcept { return kind_; }
  /// Compares an adjacency hash, O(n + m).
  bool certifies(const Graph& g) const noexcept;

 private:
  friend CertifiedOrder certify(const Graph&, EliminationOrder);
  CertifiedOrder(std::vector<Vertex> order, OrderKind kind, std::uint64_t fingerprint)
      : order_(std::move(order)), kind_(kind), fingerprint_(fingerprint) {}

  std::vector<Vertex> order_;
  OrderKind kind_;
  std::uint64_t fingerprint_;  // hash of the adjacency lists
};

/// Verifies according to `order.kind`; throws Error(Structural) with the
/// violation on failure.
CertifiedOrder certify(const Graph& g, EliminationOrder order);

struct FinderOptions {
  /// Up to this many vertices the search is exhaustive, so not-found is a
  /// proof that no strong elimination ordering exists.
  std::size_t exhaustive_cap = 10;
  /// Node limit for the backtracking search above exhaustive_cap.
  std::uint64_t node_budget = 2'000'000;
};

struct FinderResult {
  std::optional<EliminationOrder> order;
  bool exhaustive = false;  // a missing order is definitive
  std::uint64_t nodes = 0;
};

/// Depth-first search for a strong elimination ordering. Candidates at each
/// depth are tried by (degree in the remaining graph, index), so the result
/// is deterministic. Every placement checks all constraints it completes,
/// hence any returned order verifies.
FinderResult find_strong_elimination(const Graph& g, const FinderOptions& options = {});

}  // namespace gdf
