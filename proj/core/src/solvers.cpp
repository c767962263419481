#include "gdf/solvers.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gdf/error.hpp"
#include "gdf/transforms.hpp"

namespace gdf {

std::string_view to_string(Method m) noexcept { return m == Method::Greedy ? "greedy" : "oracle"; }

GreedyResult greedy_packing(const GenInstance& inst, const CertifiedOrder& order, const GreedyObserver& observer) {
  if (inst.sense() != Sense::Pack) throw Error(ErrorKind::Input, "greedy_packing needs a Pack instance");
  if (order.kind() != OrderKind::StrongElimination || !order.certifies(inst.graph())) {
    throw Error(ErrorKind::Structural, "order is not a strong elimination ordering of this graph");
  }
  const Graph& g = inst.graph();
  const std::size_t n = inst.size();
  std::vector<Value> f(n, 0);
  // k(v) - f(N[v]) so far
  std::vector<Value> residual(inst.quota().begin(), inst.quota().end());
  std::uint64_t touches = 0;

  for (std::size_t step = 0; step < n; ++step) {
    const Vertex x = order.order()[step];
    const auto nbrs = g.neighbors(x);
    Value slack = residual[x];
    for (Vertex w : nbrs) slack = std::min(slack, residual[w]);
    touches += nbrs.size() + 1;

    const Value value = std::min(slack, inst.cap(x));
    f[x] = value;
    residual[x] -= value;
    for (Vertex w : nbrs) residual[w] -= value;
    if (observer) observer(step, f);
  }
  return {Assignment(std::move(f)), touches};
}

GreedyResult greedy_packing(const GenInstance& inst, const EliminationOrder& order) {
  return greedy_packing(inst, certify(inst.graph(), order));
}

GreedyResult solve_domination_strongly_chordal(const GenInstance& inst, const CertifiedOrder& order) {
  if (inst.sense() != Sense::Dominate) {
    throw Error(ErrorKind::Input, "solve_domination_strongly_chordal needs a Dominate instance");
  }
  require_dominate_feasible(inst);
  const auto dual = dualize(inst);
  auto packed = greedy_packing(dual.output, order);
  return {dual.lift_assignment(packed.assignment), packed.neighborhood_touches};
}

GreedyResult solve_domination_strongly_chordal(const GenInstance& inst, const EliminationOrder& order) {
  return solve_domination_strongly_chordal(inst, certify(inst.graph(), order));
}

namespace {

class Enumerator {
 public:
  Enumerator(const GenInstance& inst, std::uint64_t budget)
      : inst_(inst),
        g_(inst.graph()),
        n_(inst.size()),
        dominate_(inst.sense() == Sense::Dominate),
        budget_(budget),
        f_(n_, 0),
        load_(n_, 0),
        open_cap_(n_, 0),
        suffix_cap_(n_ + 1, 0) {
    for (Vertex v = 0; v < n_; ++v) {
      open_cap_[v] = inst.cap_of_neighborhood(v);
    }
    for (std::size_t v = n_; v-- > 0;) suffix_cap_[v] = suffix_cap_[v + 1] + inst.cap(static_cast<Vertex>(v));
  }

  OracleResult run() {
    descend(0, 0);
    if (!best_) {
      // Pack always admits f = 0 and feasible Dominate admits f = u.
      throw Error(ErrorKind::Infeasible, "no feasible assignment");
    }
    return {Assignment(best_assignment_), *best_, nodes_};
  }

 private:
  bool improves(Value weight) const { return !best_ || (dominate_ ? weight < *best_ : weight > *best_); }

  void descend(Vertex x, Value weight) {
    if (x == n_) {
      if (improves(weight)) {
        best_ = weight;
        best_assignment_ = f_;
      }
      return;
    }
    if (!dominate_ && best_ && weight + suffix_cap_[x] <= *best_) return;

    for (Vertex w : g_.neighbors(x)) open_cap_[w] -= inst_.cap(x);
    open_cap_[x] -= inst_.cap(x);

    for (Value c = 0; c <= inst_.cap(x); ++c) {
      if (++nodes_ > budget_) {
        throw Error(ErrorKind::Budget, "exhaustive search exceeded its budget of " + std::to_string(budget_) +
                                           " trials");
      }
      if (dominate_ && best_ && weight + c >= *best_) break;
      apply(x, c);
      const auto verdict = check(x);
      if (verdict == Verdict::Ok) descend(x + 1, weight + c);
      apply(x, -c);
      if (verdict == Verdict::StopRaising) break;
    }

    for (Vertex w : g_.neighbors(x)) open_cap_[w] += inst_.cap(x);
    open_cap_[x] += inst_.cap(x);
  }

  void apply(Vertex x, Value delta) {
    f_[x] += delta;
    load_[x] += delta;
    for (Vertex w : g_.neighbors(x)) load_[w] += delta;
  }

  enum class Verdict { Ok, TryLarger, StopRaising };

  /// Constraints touched by x. Pack loads only grow with f(x); Dominate
  /// deficits only shrink.
  Verdict check(Vertex x) const {
    auto test = [&](Vertex w) {
      if (!dominate_) return load_[w] <= inst_.quota(w) ? Verdict::Ok : Verdict::StopRaising;
      return load_[w] + open_cap_[w] >= inst_.quota(w) ? Verdict::Ok : Verdict::TryLarger;
    };
    if (auto v = test(x); v != Verdict::Ok) return v;
    for (Vertex w : g_.neighbors(x))
      if (auto v = test(w); v != Verdict::Ok) return v;
    return Verdict::Ok;
  }

  const GenInstance& inst_;
  const Graph& g_;
  std::size_t n_;
  bool dominate_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Value> f_;
  std::vector<Value> load_;      // f(N[v]) over assigned vertices
  std::vector<Value> open_cap_;  // u(N[v]) over unassigned vertices
  std::vector<Value> suffix_cap_;
  std::optional<Value> best_;
  std::vector<Value> best_assignment_;
};

}  // namespace

OracleResult brute_force(const GenInstance& inst, const OracleOptions& options) {
  if (inst.sense() == Sense::Dominate) require_dominate_feasible(inst);
  return Enumerator(inst, options.budget).run();
}

Solution solve(const GenInstance& inst, const std::optional<EliminationOrder>& order, const SolveOptions& options) {
  if (inst.sense() == Sense::Dominate) require_dominate_feasible(inst);

  auto greedy = [&](EliminationOrder o) {
    if (o.kind != OrderKind::StrongElimination) {
      throw Error(ErrorKind::Input, "the greedy solver needs a strong elimination ordering");
    }
    const auto cert = certify(inst.graph(), o);
    auto r = inst.sense() == Sense::Pack ? greedy_packing(inst, cert) : solve_domination_strongly_chordal(inst, cert);
    const Value w = r.assignment.weight();
    return Solution{std::move(r.assignment), w, Method::Greedy, std::move(o)};
  };

  if (order) return greedy(*order);
  if (!options.force_oracle) {
    if (auto found = find_strong_elimination(inst.graph(), options.finder); found.order) {
      return greedy(std::move(*found.order));
    }
  }
  try {
    auto r = brute_force(inst, options.oracle);
    return Solution{std::move(r.assignment), r.optimum, Method::Oracle, std::nullopt};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Budget) throw;
    throw Error(ErrorKind::Budget, "no strong elimination ordering and the instance is too large for "
                                   "exhaustive search (" + std::string(e.what()) + ")");
  }
}

}  // namespace gdf
