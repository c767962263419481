#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gdf/graph.hpp"

namespace gdf {

using Value = std::int64_t;

enum class Sense {
  Dominate,  // minimize f(V) subject to f(N[v]) >= k(v)
  Pack,      // maximize f(V) subject to f(N[v]) <= k(v)
};

Sense opposite(Sense s) noexcept;
std::string_view to_string(Sense s) noexcept;

/// A (k,u) instance: graph, per-vertex neighborhood quota k, per-vertex
/// value cap u, and whether quotas are lower (Dominate) or upper (Pack)
/// bounds. k and u are nonnegative; checked on construction.
class GenInstance {
 public:
  GenInstance(Graph graph, std::vector<Value> quota, std::vector<Value> cap, Sense sense);

  /// Uniform quota and cap.
  static GenInstance uniform(Graph graph, Value quota, Value cap, Sense sense);

  const Graph& graph() const noexcept { return graph_; }
  std::span<const Value> quota() const noexcept { return quota_; }
  std::span<const Value> cap() const noexcept { return cap_; }
  Value quota(Vertex v) const { return quota_[v]; }
  Value cap(Vertex v) const { return cap_[v]; }
  Sense sense() const noexcept { return sense_; }
  std::size_t size() const noexcept { return graph_.vertex_count(); }

  /// u(N[v]).
  Value cap_of_neighborhood(Vertex v) const;
  /// u(V).
  Value total_cap() const;

  friend bool operator==(const GenInstance&, const GenInstance&) = default;

 private:
  Graph graph_;
  std::vector<Value> quota_;
  std::vector<Value> cap_;
  Sense sense_;
};

/// A valuation f over the vertices. weight() is always recomputed.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<Value> values) : values_(std::move(values)) {}
  static Assignment zeros(std::size_t n) { return Assignment(std::vector<Value>(n, 0)); }

  std::span<const Value> values() const noexcept { return values_; }
  Value operator[](Vertex v) const { return values_[v]; }
  Value& operator[](Vertex v) { return values_[v]; }
  std::size_t size() const noexcept { return values_.size(); }
  Value weight() const;

  /// f(N[v]) on g.
  Value neighborhood_sum(const Graph& g, Vertex v) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Value> values_;
};

enum class ViolationKind { Negative, AboveCap, BelowQuota, AboveQuota };
std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
  Vertex vertex;
  ViolationKind kind;
  Value observed;  // f(v) or f(N[v])
  Value bound;     // 0, u(v) or k(v)
};

/// First violation scanning vertices in index order; per vertex the value
/// itself is checked before its neighborhood sum.
struct Feasibility {
  std::optional<Violation> violation;
  explicit operator bool() const noexcept { return !violation; }
};

/// Throws Error(Input) if the assignment size differs from the instance.
Feasibility is_feasible(const GenInstance& inst, const Assignment& a);

/// Throws InfeasibleError for a Dominate instance with k(v) > u(N[v]).
void require_dominate_feasible(const GenInstance& inst);

/// Clamps quotas and caps without changing the optimum.
///   Dominate: k'(v) = min{k(v), u(N[v])}, u'(v) = min{u(v), max k'(N[v])}.
///   Pack:     u'(v) = min{u(v), k(v)},    k'(v) = min{k(v), u'(N[v])}.
/// Pack clamps the caps first so the result already satisfies
/// u' <= k' <= u'(N[v]); this makes normalize idempotent.
/// Throws InfeasibleError for infeasible Dominate instances.
GenInstance normalize(const GenInstance& inst);

/// Dominate: k(v) <= u(N[v]) and u(v) <= max k(N[v]).
/// Pack: u(v) <= k(v) <= u(N[v]).
bool is_normalized(const GenInstance& inst);

}  // namespace gdf
