#include "gdf/value_map.hpp"

#include <sstream>

#include "gdf/error.hpp"

namespace gdf {

ValueMap ValueMap::identity(std::string description) { return {1, 0, false, std::move(description)}; }

Value ValueMap::apply(Value transformed) const noexcept {
  return flip ? offset - scale * transformed : scale * transformed + offset;
}

std::string_view to_string(LiftKind kind) noexcept {
  switch (kind) {
    case LiftKind::Project: return "project";
    case LiftKind::Complement: return "complement";
    case LiftKind::CliqueSum: return "clique-sum";
    case LiftKind::RestoreFixed: return "restore-fixed";
    case LiftKind::Affine: return "affine";
    case LiftKind::PendantExchange: return "pendant-exchange";
  }
  return "unknown";
}

Lift Lift::identity(std::size_t n) {
  Lift lift;
  lift.kind = LiftKind::Project;
  lift.terms.resize(n);
  for (Vertex v = 0; v < n; ++v) lift.terms[v].sources = {v};
  return lift;
}

std::vector<Value> Lift::apply(const Graph& output_graph, std::span<const Value> output_values) const {
  std::vector<Value> g(output_values.begin(), output_values.end());
  for (const auto& term : terms)
    for (Vertex w : term.sources)
      if (w >= g.size()) throw Error(ErrorKind::Input, "lift source outside the transformed assignment");

  if (kind == LiftKind::PendantExchange) {
    if (output_graph.vertex_count() != g.size()) {
      throw Error(ErrorKind::Input, "lift graph does not match the transformed assignment");
    }
    std::vector<char> is_pendant(g.size(), 0);
    for (const auto& group : pendant_groups)
      for (Vertex w : group.pendants) is_pendant[w] = 1;
    // A zero pendant takes the unit of some non-pendant in N[anchor]; if
    // there is none, raising it keeps f(N[anchor]) within the quota.
    for (const auto& group : pendant_groups) {
      for (Vertex w : group.pendants) {
        if (g[w] != 0) continue;
        auto donor = [&]() -> std::optional<Vertex> {
          if (g[group.anchor] > 0) return group.anchor;
          for (Vertex z : output_graph.neighbors(group.anchor))
            if (!is_pendant[z] && g[z] > 0) return z;
          return std::nullopt;
        }();
        if (donor) --g[*donor];
        g[w] = 1;
      }
    }
  }

  std::vector<Value> out(terms.size());
  for (std::size_t v = 0; v < terms.size(); ++v) {
    Value s = 0;
    for (Vertex w : terms[v].sources) s += g[w];
    out[v] = terms[v].scale * s + terms[v].offset;
  }
  return out;
}

std::vector<std::string> Lift::describe() const {
  std::vector<std::string> lines;
  lines.push_back("lift " + std::string(to_string(kind)));
  for (const auto& group : pendant_groups) {
    std::ostringstream s;
    s << "lift pendants " << group.anchor + 1 << " :";
    for (Vertex w : group.pendants) s << ' ' << w + 1;
    lines.push_back(s.str());
  }
  for (std::size_t v = 0; v < terms.size(); ++v) {
    std::ostringstream s;
    s << "lift f " << v + 1 << " = " << terms[v].scale << " * sum(";
    for (std::size_t i = 0; i < terms[v].sources.size(); ++i) s << (i ? " " : "") << terms[v].sources[i] + 1;
    s << ") + " << terms[v].offset;
    lines.push_back(s.str());
  }
  return lines;
}

Assignment Reduction::lift_assignment(const Assignment& output_assignment) const {
  if (output_assignment.size() != output.size()) {
    throw Error(ErrorKind::Input, "assignment does not match the reduction output");
  }
  return Assignment(lift.apply(output.graph(), output_assignment.values()));
}

}  // namespace gdf
