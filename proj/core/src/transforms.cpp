#include "gdf/transforms.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "gdf/error.hpp"

namespace gdf {

Reduction dualize(const GenInstance& inst) {
  const std::size_t n = inst.size();
  std::vector<Value> dual_quota(n);
  for (Vertex v = 0; v < n; ++v) {
    const Value room = inst.cap_of_neighborhood(v);
    if (inst.quota(v) > room) {
      throw Error(ErrorKind::NotNormalized,
                  "dualize needs k(v) <= u(N[v]); vertex " + std::to_string(v + 1) + " has k=" +
                      std::to_string(inst.quota(v)) + " > " + std::to_string(room) + " (run normalize first)");
    }
    dual_quota[v] = room - inst.quota(v);
  }
  Lift lift;
  lift.kind = LiftKind::Complement;
  lift.terms.resize(n);
  for (Vertex v = 0; v < n; ++v) lift.terms[v] = {{v}, -1, inst.cap(v)};

  std::vector<Value> cap(inst.cap().begin(), inst.cap().end());
  return {GenInstance(inst.graph(), std::move(dual_quota), std::move(cap), opposite(inst.sense())),
          ValueMap{1, inst.total_cap(), true, "duality: original = u(V) - transformed"},
          VertexMap::identity(n), std::move(lift)};
}

LabelledReduction eliminate_fixed_labels(const LabelledInstance& labelled) {
  if (!labelled.is_canonical()) {
    throw Error(ErrorKind::Unsupported, "fixed-label elimination needs I = 0 and d = 1");
  }
  const Graph& g = labelled.graph();
  const std::size_t n = labelled.size();
  auto fixed_value = [&](Vertex v) -> Value { return labelled.label(v).value_or(0); };

  std::vector<Label> labels(n);
  std::vector<Value> quota(n);
  Value fixed_total = 0;
  Lift lift;
  lift.kind = LiftKind::RestoreFixed;
  lift.terms.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    Value fixed_nearby = fixed_value(v);
    for (Vertex w : g.neighbors(v)) fixed_nearby += fixed_value(w);
    quota[v] = std::max<Value>(labelled.quota(v) - fixed_nearby, 0);
    if (labelled.label(v)) {
      labels[v] = 0;
      fixed_total += *labelled.label(v);
      lift.terms[v] = {{}, 1, *labelled.label(v)};
    } else {
      labels[v] = kFree;
      lift.terms[v] = {{v}, 1, 0};
    }
  }
  return {LabelledInstance(g, 0, 1, labelled.levels(), std::move(labels), std::move(quota)),
          ValueMap{1, fixed_total, false, "fixed labels: original = transformed + t(fixed)"},
          std::move(lift)};
}

Reduction free_reduction(const GenInstance& inst, Value levels) {
  if (inst.sense() != Sense::Pack) throw Error(ErrorKind::Input, "free_reduction needs a Pack instance");
  const std::size_t n = inst.size();
  std::map<Vertex, std::size_t> requests;
  for (Vertex v = 0; v < n; ++v) {
    if (inst.cap(v) == 0) {
      requests[v] = 1;
    } else if (inst.cap(v) != levels) {
      throw Error(ErrorKind::Input, "free_reduction needs caps in {0, " + std::to_string(levels) + "}; u(" +
                                        std::to_string(v + 1) + ")=" + std::to_string(inst.cap(v)));
    }
  }
  auto edit = add_pendants(inst.graph(), requests);
  const std::size_t total = edit.graph.vertex_count();
  std::vector<Value> quota(inst.quota().begin(), inst.quota().end());
  quota.resize(total, 0);
  return {GenInstance(std::move(edit.graph), std::move(quota), std::vector<Value>(total, levels), Sense::Pack),
          ValueMap::identity("free: pendants with quota 0 pin zero-cap vertices"), std::move(edit.map),
          Lift::identity(n)};
}

Reduction uniformize_packing(const GenInstance& inst) {
  if (inst.sense() != Sense::Pack) throw Error(ErrorKind::Input, "uniformize_packing needs a Pack instance");
  if (std::any_of(inst.cap().begin(), inst.cap().end(), [](Value u) { return u != 1; })) {
    throw Error(ErrorKind::Input, "uniformize_packing needs unit caps");
  }
  if (!is_normalized(inst)) {
    throw Error(ErrorKind::NotNormalized, "uniformize_packing needs a normalized instance (run normalize first)");
  }
  const std::size_t n = inst.size();
  const Value target = n == 0 ? 0 : *std::max_element(inst.quota().begin(), inst.quota().end());
  std::map<Vertex, std::size_t> requests;
  Value added = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (Value gap = target - inst.quota(v); gap > 0) {
      requests[v] = static_cast<std::size_t>(gap);
      added += gap;
    }
  }
  auto edit = add_pendants(inst.graph(), requests);
  Lift lift = Lift::identity(n);
  lift.kind = LiftKind::PendantExchange;
  std::size_t next = 0;
  for (auto [anchor, count] : requests) {
    PendantGroup group{anchor, {}};
    for (std::size_t c = 0; c < count; ++c) group.pendants.push_back(edit.map.created[next++]);
    lift.pendant_groups.push_back(std::move(group));
  }
  return {GenInstance::uniform(std::move(edit.graph), target, 1, Sense::Pack),
          ValueMap{1, -added, false, "uniform quota: original = transformed - sum(k* - k(v))"},
          std::move(edit.map), std::move(lift)};
}

Reduction flatten_capacities(const GenInstance& inst, Value max_cap) {
  if (inst.sense() != Sense::Dominate) {
    throw Error(ErrorKind::Input, "flatten_capacities needs a Dominate instance");
  }
  const std::size_t n = inst.size();
  std::vector<std::size_t> sizes(n);
  for (Vertex v = 0; v < n; ++v) {
    if (inst.cap(v) > max_cap) {
      throw Error(ErrorKind::Input, "u(" + std::to_string(v + 1) + ")=" + std::to_string(inst.cap(v)) +
                                        " exceeds the bound " + std::to_string(max_cap));
    }
    sizes[v] = static_cast<std::size_t>(inst.cap(v));
  }
  auto edit = replace_by_cliques(inst.graph(), sizes);
  const std::size_t total = edit.graph.vertex_count();
  std::vector<Value> quota(total);
  std::vector<Value> cap(total);
  Lift lift;
  lift.kind = LiftKind::CliqueSum;
  lift.terms.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : edit.map.forward[v]) {
      quota[w] = inst.quota(v);
      cap[w] = inst.cap(v) == 0 ? 0 : 1;
    }
    lift.terms[v] = {edit.map.forward[v], 1, 0};
  }
  return {GenInstance(std::move(edit.graph), std::move(quota), std::move(cap), Sense::Dominate),
          ValueMap::identity("flatten: each vertex becomes a clique of u(v) unit-cap copies"),
          std::move(edit.map), std::move(lift)};
}

}  // namespace gdf
