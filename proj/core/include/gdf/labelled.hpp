#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gdf/graph.hpp"
#include "gdf/instance.hpp"

namespace gdf {

/// A vertex label: a fixed value from the label range, or free (nullopt).
using Label = std::optional<Value>;
inline constexpr Label kFree = std::nullopt;

/// Labelling function (I, d, l, t, k): values are drawn from the arithmetic
/// range Y = {base + j*step : j in [0, levels]}; fixed vertices must take
/// their label, free vertices any value of Y; k is the neighborhood quota.
class LabelledInstance {
 public:
  /// Throws Error(Input) if step < 1, levels < 0, sizes mismatch, or a fixed
  /// label lies outside Y.
  LabelledInstance(Graph graph, Value base, Value step, Value levels, std::vector<Label> labels,
                   std::vector<Value> quota);

  const Graph& graph() const noexcept { return graph_; }
  Value base() const noexcept { return base_; }
  Value step() const noexcept { return step_; }
  Value levels() const noexcept { return levels_; }
  std::span<const Label> labels() const noexcept { return labels_; }
  const Label& label(Vertex v) const { return labels_[v]; }
  std::span<const Value> quota() const noexcept { return quota_; }
  Value quota(Vertex v) const { return quota_[v]; }
  std::size_t size() const noexcept { return graph_.vertex_count(); }

  /// Largest value of Y.
  Value top() const noexcept { return base_ + step_ * levels_; }
  bool in_range(Value x) const noexcept;
  /// base == 0 and step == 1, so Y = [0, levels].
  bool is_canonical() const noexcept { return base_ == 0 && step_ == 1; }

  friend bool operator==(const LabelledInstance&, const LabelledInstance&) = default;

 private:
  Graph graph_;
  Value base_;
  Value step_;
  Value levels_;
  std::vector<Label> labels_;
  std::vector<Value> quota_;
};

}  // namespace gdf
