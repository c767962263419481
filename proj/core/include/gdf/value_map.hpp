#pragma once

#include <span>
#include <string>
#include <vector>

#include "gdf/graph.hpp"
#include "gdf/instance.hpp"
#include "gdf/labelled.hpp"

namespace gdf {

/// Exact affine relation between the optimum of a transformed instance and
/// the optimum of the instance it came from:
///   original = scale * transformed + offset        (flip == false)
///   original = offset - scale * transformed        (flip == true)
/// `flip` records a min/max exchange. scale >= 1.
struct ValueMap {
  Value scale = 1;
  Value offset = 0;
  bool flip = false;
  std::string description;

  static ValueMap identity(std::string description);
  Value apply(Value transformed) const noexcept;

  friend bool operator==(const ValueMap&, const ValueMap&) = default;
};

enum class LiftKind {
  Project,        // copy values of a vertex subset
  Complement,     // f(v) = u(v) - g(v)
  CliqueSum,      // f(v) = sum of g over the clique replacing v
  RestoreFixed,   // fixed labels get their value back, free vertices copy g
  Affine,         // per-vertex f(v) = scale*g(v) + offset
  PendantExchange,  // push pendant values to 1 by exchange, then project
};

std::string_view to_string(LiftKind kind) noexcept;

/// f(v) = scale * sum(g(w) for w in sources) + offset. Empty sources give a
/// constant.
struct LiftTerm {
  std::vector<Vertex> sources;
  Value scale = 1;
  Value offset = 0;
};

struct PendantGroup {
  Vertex anchor;
  std::vector<Vertex> pendants;
};

/// Declarative rule turning an assignment of a transformed instance into an
/// assignment of the original one; one term per original vertex.
struct Lift {
  LiftKind kind = LiftKind::Project;
  std::vector<LiftTerm> terms;
  std::vector<PendantGroup> pendant_groups;  // PendantExchange only

  static Lift identity(std::size_t n);

  /// `output_graph` is only consulted by PendantExchange.
  std::vector<Value> apply(const Graph& output_graph, std::span<const Value> output_values) const;

  /// Human-readable, one line per term.
  std::vector<std::string> describe() const;
};

/// A value-preserving transformation of a GenInstance (or of a classical
/// problem into one).
struct Reduction {
  GenInstance output;
  ValueMap value_map;
  VertexMap vertex_map;
  Lift lift;

  Assignment lift_assignment(const Assignment& output_assignment) const;
};

/// Same, for labelled-to-labelled steps.
struct LabelledReduction {
  LabelledInstance output;
  ValueMap value_map;
  Lift lift;
};

}  // namespace gdf
