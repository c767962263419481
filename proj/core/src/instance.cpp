#include "gdf/instance.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gdf/error.hpp"

namespace gdf {

Sense opposite(Sense s) noexcept { return s == Sense::Dominate ? Sense::Pack : Sense::Dominate; }

std::string_view to_string(Sense s) noexcept { return s == Sense::Dominate ? "dominate" : "pack"; }

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::Negative: return "negative-value";
    case ViolationKind::AboveCap: return "above-cap";
    case ViolationKind::BelowQuota: return "below-quota";
    case ViolationKind::AboveQuota: return "above-quota";
  }
  return "unknown";
}

GenInstance::GenInstance(Graph graph, std::vector<Value> quota, std::vector<Value> cap, Sense sense)
    : graph_(std::move(graph)), quota_(std::move(quota)), cap_(std::move(cap)), sense_(sense) {
  const std::size_t n = graph_.vertex_count();
  if (quota_.size() != n || cap_.size() != n) {
    throw Error(ErrorKind::Input, "k and u must have one entry per vertex (n=" + std::to_string(n) + ")");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (quota_[v] < 0) throw Error(ErrorKind::Input, "k(" + std::to_string(v) + ") is negative");
    if (cap_[v] < 0) throw Error(ErrorKind::Input, "u(" + std::to_string(v) + ") is negative");
  }
}

GenInstance GenInstance::uniform(Graph graph, Value quota, Value cap, Sense sense) {
  const std::size_t n = graph.vertex_count();
  return GenInstance(std::move(graph), std::vector<Value>(n, quota), std::vector<Value>(n, cap), sense);
}

Value GenInstance::cap_of_neighborhood(Vertex v) const {
  Value s = cap_[v];
  for (Vertex w : graph_.neighbors(v)) s += cap_[w];
  return s;
}

Value GenInstance::total_cap() const { return std::accumulate(cap_.begin(), cap_.end(), Value{0}); }

Value Assignment::weight() const { return std::accumulate(values_.begin(), values_.end(), Value{0}); }

Value Assignment::neighborhood_sum(const Graph& g, Vertex v) const {
  Value s = values_[v];
  for (Vertex w : g.neighbors(v)) s += values_[w];
  return s;
}

Feasibility is_feasible(const GenInstance& inst, const Assignment& a) {
  if (a.size() != inst.size()) {
    throw Error(ErrorKind::Input, "assignment has " + std::to_string(a.size()) + " entries, instance has " +
                                      std::to_string(inst.size()) + " vertices");
  }
  const Graph& g = inst.graph();
  for (Vertex v = 0; v < inst.size(); ++v) {
    if (a[v] < 0) return {Violation{v, ViolationKind::Negative, a[v], 0}};
    if (a[v] > inst.cap(v)) return {Violation{v, ViolationKind::AboveCap, a[v], inst.cap(v)}};
    const Value s = a.neighborhood_sum(g, v);
    if (inst.sense() == Sense::Dominate && s < inst.quota(v)) {
      return {Violation{v, ViolationKind::BelowQuota, s, inst.quota(v)}};
    }
    if (inst.sense() == Sense::Pack && s > inst.quota(v)) {
      return {Violation{v, ViolationKind::AboveQuota, s, inst.quota(v)}};
    }
  }
  return {};
}

void require_dominate_feasible(const GenInstance& inst) {
  for (Vertex v = 0; v < inst.size(); ++v) {
    if (inst.quota(v) > inst.cap_of_neighborhood(v)) {
      throw InfeasibleError(v, "infeasible instance: k(" + std::to_string(v + 1) + ")=" +
                                   std::to_string(inst.quota(v)) + " exceeds u(N[v])=" +
                                   std::to_string(inst.cap_of_neighborhood(v)));
    }
  }
}

GenInstance normalize(const GenInstance& inst) {
  const Graph& g = inst.graph();
  const std::size_t n = inst.size();
  std::vector<Value> k(inst.quota().begin(), inst.quota().end());
  std::vector<Value> u(inst.cap().begin(), inst.cap().end());

  if (inst.sense() == Sense::Dominate) {
    require_dominate_feasible(inst);
    for (Vertex v = 0; v < n; ++v) k[v] = std::min(k[v], inst.cap_of_neighborhood(v));
    for (Vertex v = 0; v < n; ++v) {
      Value largest = k[v];
      for (Vertex w : g.neighbors(v)) largest = std::max(largest, k[w]);
      u[v] = std::min(u[v], largest);
    }
  } else {
    for (Vertex v = 0; v < n; ++v) u[v] = std::min(u[v], k[v]);
    for (Vertex v = 0; v < n; ++v) {
      Value s = u[v];
      for (Vertex w : g.neighbors(v)) s += u[w];
      k[v] = std::min(k[v], s);
    }
  }
  return GenInstance(g, std::move(k), std::move(u), inst.sense());
}

bool is_normalized(const GenInstance& inst) {
  const Graph& g = inst.graph();
  for (Vertex v = 0; v < inst.size(); ++v) {
    const Value k = inst.quota(v);
    const Value u = inst.cap(v);
    if (k > inst.cap_of_neighborhood(v)) return false;
    if (inst.sense() == Sense::Dominate) {
      Value largest = k;
      for (Vertex w : g.neighbors(v)) largest = std::max(largest, inst.quota(w));
      if (u > largest) return false;
    } else if (u > k) {
      return false;
    }
  }
  return true;
}

}  // namespace gdf
