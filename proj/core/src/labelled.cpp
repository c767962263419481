#include "gdf/labelled.hpp"

#include <string>

#include "gdf/error.hpp"

namespace gdf {

LabelledInstance::LabelledInstance(Graph graph, Value base, Value step, Value levels,
                                   std::vector<Label> labels, std::vector<Value> quota)
    : graph_(std::move(graph)),
      base_(base),
      step_(step),
      levels_(levels),
      labels_(std::move(labels)),
      quota_(std::move(quota)) {
  if (step_ < 1) throw Error(ErrorKind::Input, "label step d must be positive");
  if (levels_ < 0) throw Error(ErrorKind::Input, "label levels l must be nonnegative");
  const std::size_t n = graph_.vertex_count();
  if (labels_.size() != n || quota_.size() != n) {
    throw Error(ErrorKind::Input, "t and k must have one entry per vertex");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (labels_[v] && !in_range(*labels_[v])) {
      throw Error(ErrorKind::Input, "label t(" + std::to_string(v + 1) + ")=" + std::to_string(*labels_[v]) +
                                        " is not in the label range");
    }
  }
}

bool LabelledInstance::in_range(Value x) const noexcept {
  if (x < base_ || x > top()) return false;
  return (x - base_) % step_ == 0;
}

}  // namespace gdf
