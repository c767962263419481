#include "gdf/problems.hpp"

#include <algorithm>
#include <string>

#include "gdf/error.hpp"
#include "gdf/transforms.hpp"

namespace gdf {
namespace {

Value ceil_div(Value a, Value b) {  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

void require_positive(Value k, const char* what) {
  if (k < 1) throw Error(ErrorKind::Input, std::string(what) + " needs k >= 1");
}

}  // namespace

GenInstance from_domination(const Graph& g) { return GenInstance::uniform(g, 1, 1, Sense::Dominate); }

GenInstance from_two_packing(const Graph& g) { return GenInstance::uniform(g, 1, 1, Sense::Pack); }

GenInstance from_k_tuple(const Graph& g, Value k) {
  require_positive(k, "k-tuple domination");
  return GenInstance::uniform(g, k, 1, Sense::Dominate);
}

GenInstance from_limited_packing(const Graph& g, Value k) {
  require_positive(k, "k-limited packing");
  return GenInstance::uniform(g, k, 1, Sense::Pack);
}

GenInstance from_braces_k(const Graph& g, Value k, Sense sense) {
  require_positive(k, "{k}-functions");
  return GenInstance::uniform(g, k, k, sense);
}

GenInstance from_fault_tolerant(const Graph& g, std::vector<Value> demand) {
  return GenInstance(g, std::move(demand), std::vector<Value>(g.vertex_count(), 1), Sense::Dominate);
}

GenInstance from_generalized_limited_packing(const Graph& g, std::vector<Value> quota,
                                             const std::vector<bool>& allowed) {
  if (allowed.size() != g.vertex_count()) throw Error(ErrorKind::Input, "allowed set has the wrong size");
  std::vector<Value> cap(g.vertex_count());
  for (Vertex v = 0; v < cap.size(); ++v) cap[v] = allowed[v] ? 1 : 0;
  return GenInstance(g, std::move(quota), std::move(cap), Sense::Pack);
}

GenInstance labelled_as_instance(const LabelledInstance& labelled, Sense sense) {
  if (!labelled.is_canonical()) {
    throw Error(ErrorKind::Unsupported, "only I = 0, d = 1 labellings map directly to (k, u) instances");
  }
  const std::size_t n = labelled.size();
  std::vector<Value> quota(n);
  std::vector<Value> cap(n);
  for (Vertex v = 0; v < n; ++v) {
    if (labelled.label(v) && *labelled.label(v) != 0) {
      throw Error(ErrorKind::Unsupported, "fixed label t(" + std::to_string(v + 1) + ") must be 0");
    }
    if (labelled.quota(v) < 0 && sense == Sense::Pack) {
      throw Error(ErrorKind::Input, "packing quota k(" + std::to_string(v + 1) + ") is negative");
    }
    quota[v] = std::max<Value>(labelled.quota(v), 0);
    cap[v] = labelled.label(v) ? 0 : labelled.levels();
  }
  return GenInstance(labelled.graph(), std::move(quota), std::move(cap), sense);
}

Reduction from_labelled(const LabelledInstance& labelled, Sense sense) {
  const std::size_t n = labelled.size();
  if (sense == Sense::Pack) {
    if (!labelled.is_canonical()) {
      throw Error(ErrorKind::Unsupported, "labelled packing is only defined for I = 0, d = 1");
    }
    for (Vertex v = 0; v < n; ++v) {
      if (labelled.label(v) && *labelled.label(v) != 0) {
        throw Error(ErrorKind::Unsupported, "labelled packing needs labels in {0, F}");
      }
    }
    Lift lift;
    lift.kind = LiftKind::RestoreFixed;
    lift.terms.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      lift.terms[v] = labelled.label(v) ? LiftTerm{{}, 1, 0} : LiftTerm{{v}, 1, 0};
    }
    return {labelled_as_instance(labelled, Sense::Pack), ValueMap::identity("labelled packing"),
            VertexMap::identity(n), std::move(lift)};
  }

  // Rescale to Y = [0, l]: f = I + d*g.
  const Graph& g = labelled.graph();
  const Value base = labelled.base();
  const Value step = labelled.step();
  std::vector<Label> labels(n);
  std::vector<Value> quota(n);
  for (Vertex v = 0; v < n; ++v) {
    if (labelled.label(v)) labels[v] = (*labelled.label(v) - base) / step;
    const Value shift = base * static_cast<Value>(g.degree(v) + 1);
    quota[v] = ceil_div(labelled.quota(v) - shift, step);
  }
  LabelledInstance canonical(g, 0, 1, labelled.levels(), std::move(labels), std::move(quota));
  auto freed = eliminate_fixed_labels(canonical);

  Lift lift = freed.lift;
  lift.kind = base == 0 && step == 1 ? LiftKind::RestoreFixed : LiftKind::Affine;
  for (auto& term : lift.terms) {
    term.scale *= step;
    term.offset = base + step * term.offset;
  }
  const Value n_signed = static_cast<Value>(n);
  ValueMap map{step, step * freed.value_map.offset + base * n_signed, false,
               "labelled: original = d * (transformed + t*(fixed)) + I * n"};
  return {labelled_as_instance(freed.output, Sense::Dominate), std::move(map), VertexMap::identity(n),
          std::move(lift)};
}

Reduction from_mdom(const Graph& g, std::vector<Value> quota, const std::vector<bool>& required) {
  if (required.size() != g.vertex_count()) throw Error(ErrorKind::Input, "required set has the wrong size");
  std::vector<Label> labels(g.vertex_count());
  for (Vertex v = 0; v < labels.size(); ++v) labels[v] = required[v] ? Label{1} : kFree;
  return from_labelled(LabelledInstance(g, 0, 1, 1, std::move(labels), std::move(quota)), Sense::Dominate);
}

Reduction from_signed(const Graph& g) {
  const std::size_t n = g.vertex_count();
  auto red = from_labelled(LabelledInstance(g, -1, 2, 1, std::vector<Label>(n, kFree), std::vector<Value>(n, 1)),
                           Sense::Dominate);
  red.value_map.description = "signed domination: original = 2 * f(V) - n";
  return red;
}

Reduction from_minus(const Graph& g) {
  const std::size_t n = g.vertex_count();
  auto red = from_labelled(LabelledInstance(g, -1, 1, 2, std::vector<Label>(n, kFree), std::vector<Value>(n, 1)),
                           Sense::Dominate);
  red.value_map.description = "minus domination: original = f(V) - n";
  return red;
}

}  // namespace gdf
