#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "gdf/error.hpp"
#include "gdf/generators.hpp"
#include "gdf/orderings.hpp"
#include "gdf/problems.hpp"
#include "gdf/solvers.hpp"
#include "gdf/transforms.hpp"
#include "oracles.hpp"

namespace gdf::selftest {
namespace {

using Clock = std::chrono::steady_clock;

/// Counts checks and keeps the first failure.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (!ok && !failure_) failure_ = what();
  }
  void case_done() { ++cases_; }
  std::size_t cases() const { return cases_; }
  bool ok() const { return !failure_; }
  std::string summary(const std::string& passed_text) const {
    return failure_ ? *failure_ : passed_text + " (" + std::to_string(checks_) + " checks)";
  }

 private:
  std::size_t cases_ = 0;
  std::size_t checks_ = 0;
  std::optional<std::string> failure_;
};

std::string show(const GenInstance& inst) {
  std::ostringstream s;
  s << to_string(inst.sense()) << " n=" << inst.size() << " edges=[";
  for (auto [a, b] : inst.graph().edges()) s << a << '-' << b << ' ';
  s << "] k=[";
  for (Value x : inst.quota()) s << x << ' ';
  s << "] u=[";
  for (Value x : inst.cap()) s << x << ' ';
  s << ']';
  return s.str();
}

enum class Family { Gnp, Tree, Interval };

Graph random_graph(Family family, std::size_t n, std::mt19937_64& rng) {
  const std::uint64_t seed = rng();
  switch (family) {
    case Family::Gnp: return gen_random_graph(n, std::uniform_real_distribution<double>(0.2, 0.7)(rng), seed);
    case Family::Tree: return gen_random_tree(n, seed);
    case Family::Interval: return gen_random_interval_graph(n, seed);
  }
  return Graph::edgeless(n);
}

std::size_t pick_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Sense pick_sense(std::mt19937_64& rng) { return rng() % 2 ? Sense::Pack : Sense::Dominate; }

const OracleOptions kWideBudget{200'000'000};

// 1. L_{k,u} = u(V) - gamma_{k',u} and gamma_{k,u} = u(V) - L_{k',u}.
void duality(std::mt19937_64& rng, Tally& t) {
  const Family families[] = {Family::Gnp, Family::Tree, Family::Interval};
  for (int i = 0; i < 540; ++i) {
    const Graph g = random_graph(families[i % 3], pick_size(rng, 1, 7), rng);
    const Sense sense = i % 2 ? Sense::Pack : Sense::Dominate;
    const auto inst = normalize(oracle::random_feasible_instance(g, sense, 3, rng));
    const auto dual = dualize(inst);
    const auto primal_opt = brute_force(inst).optimum;
    const auto dual_opt = brute_force(dual.output);
    t.check(oracle::optimum(inst) == primal_opt && oracle::optimum(dual.output) == dual_opt.optimum,
            [&] { return "brute force disagrees with plain enumeration on " + show(inst); });
    t.check(primal_opt == inst.total_cap() - dual_opt.optimum && primal_opt == dual.value_map.apply(dual_opt.optimum),
            [&] {
              return "duality broken: primal=" + std::to_string(primal_opt) + " dual=" +
                     std::to_string(dual_opt.optimum) + " on " + show(inst);
            });
    const auto lifted = dual.lift_assignment(dual_opt.assignment);
    t.check(oracle::feasible(inst, lifted.values()) && lifted.weight() == primal_opt,
            [&] { return "lifted dual optimum is not optimal for " + show(inst); });
    t.case_done();
  }
}

// 2. Greedy (and duality-composed greedy) equals the oracle on strongly
// chordal graphs.
void greedy_matches_oracle(std::mt19937_64& rng, Tally& t) {
  for (int i = 0; i < 320; ++i) {
    const Graph g = random_graph(i % 2 ? Family::Tree : Family::Interval, pick_size(rng, 1, 12), rng);
    const auto found = find_strong_elimination(g);
    t.check(found.order.has_value(), [&] { return "no strong elimination ordering found for a generated graph"; });
    if (!found.order) continue;
    const auto cert = certify(g, *found.order);

    const auto pack = oracle::random_instance(g, Sense::Pack, 3, rng);
    const auto greedy = greedy_packing(pack, cert);
    const auto best = brute_force(pack, kWideBudget);
    t.check(greedy.assignment.weight() == best.optimum && oracle::feasible(pack, greedy.assignment.values()), [&] {
      return "greedy packing " + std::to_string(greedy.assignment.weight()) + " vs oracle " +
             std::to_string(best.optimum) + " on " + show(pack);
    });

    const auto dom = oracle::random_feasible_instance(g, Sense::Dominate, 3, rng);
    const auto dom_greedy = solve_domination_strongly_chordal(dom, cert);
    const auto dom_best = brute_force(dom, kWideBudget);
    t.check(dom_greedy.assignment.weight() == dom_best.optimum && oracle::feasible(dom, dom_greedy.assignment.values()),
            [&] {
              return "duality greedy " + std::to_string(dom_greedy.assignment.weight()) + " vs oracle " +
                     std::to_string(dom_best.optimum) + " on " + show(dom);
            });

    const auto dual = dualize(dom);
    const auto dual_greedy = greedy_packing(dual.output, cert);
    t.check(dual_greedy.assignment.weight() + dom_greedy.assignment.weight() == dom.total_cap(),
            [&] { return "solver-level duality identity fails on " + show(dom); });
    t.case_done();
  }
}

template <class Body>
std::size_t repeat_valid(std::size_t wanted, std::size_t max_attempts, Body&& body) {
  std::size_t valid = 0;
  for (std::size_t attempt = 0; attempt < max_attempts && valid < wanted; ++attempt)
    if (body()) ++valid;
  return valid;
}

// 3. Value maps and lifts of the four reductions.
std::string reductions(std::mt19937_64& rng, Tally& t) {
  constexpr std::size_t kWanted = 120;
  std::ostringstream counts;

  auto fixed = repeat_valid(kWanted, 5000, [&] {
    const std::size_t n = pick_size(rng, 1, 6);
    const Graph g = random_graph(Family::Gnp, n, rng);
    const Value levels = std::uniform_int_distribution<Value>(1, 3)(rng);
    std::vector<Label> labels(n);
    std::vector<Value> quota(n);
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 2) labels[v] = std::uniform_int_distribution<Value>(0, levels)(rng);
      quota[v] = std::uniform_int_distribution<Value>(0, 3)(rng);
    }
    const LabelledInstance labelled(g, 0, 1, levels, labels, quota);
    const auto input_opt = oracle::labelled_optimum(labelled, Sense::Dominate);
    const auto red = eliminate_fixed_labels(labelled);
    const auto as_inst = labelled_as_instance(red.output, Sense::Dominate);
    if (!input_opt) {
      bool refused = false;
      try {
        brute_force(as_inst);
      } catch (const InfeasibleError&) {
        refused = true;
      }
      t.check(refused, [&] { return "fixed-label elimination made an infeasible labelling feasible"; });
      return false;
    }
    const auto out = brute_force(as_inst);
    t.check(red.value_map.apply(out.optimum) == *input_opt, [&] {
      return "fixed-label value map: " + std::to_string(red.value_map.apply(out.optimum)) + " vs " +
             std::to_string(*input_opt);
    });
    const auto lifted = red.lift.apply(as_inst.graph(), out.assignment.values());
    const Value w = std::accumulate(lifted.begin(), lifted.end(), Value{0});
    t.check(oracle::labelled_feasible(labelled, Sense::Dominate, lifted) && w == *input_opt,
            [&] { return "fixed-label lift is not an optimal labelled function"; });
    return true;
  });
  counts << "w0=" << fixed;

  auto check_reduction = [&](const GenInstance& input, const Reduction& red, const char* name) {
    const auto in = brute_force(input, kWideBudget);
    const auto out = brute_force(red.output, kWideBudget);
    t.check(red.value_map.apply(out.optimum) == in.optimum, [&] {
      return std::string(name) + " value map: " + std::to_string(red.value_map.apply(out.optimum)) + " vs " +
             std::to_string(in.optimum) + " on " + show(input);
    });
    const auto lifted = red.lift_assignment(out.assignment);
    t.check(oracle::feasible(input, lifted.values()) && lifted.weight() == in.optimum,
            [&] { return std::string(name) + " lift is not optimal on " + show(input); });
  };

  auto free = repeat_valid(kWanted, kWanted, [&] {
    const std::size_t n = pick_size(rng, 1, 6);
    const Graph g = random_graph(Family::Gnp, n, rng);
    const Value levels = std::uniform_int_distribution<Value>(1, 3)(rng);
    std::vector<Value> quota(n);
    std::vector<Value> cap(n);
    for (Vertex v = 0; v < n; ++v) {
      quota[v] = std::uniform_int_distribution<Value>(0, 3)(rng);
      cap[v] = rng() % 3 == 0 ? 0 : levels;
    }
    const GenInstance input(g, quota, cap, Sense::Pack);
    check_reduction(input, free_reduction(input, levels), "free");
    return true;
  });
  counts << " free=" << free;

  auto uniform = repeat_valid(kWanted, kWanted, [&] {
    const std::size_t n = pick_size(rng, 1, 6);
    const Graph g = random_graph(rng() % 2 ? Family::Gnp : Family::Tree, n, rng);
    std::vector<Value> quota(n);
    for (auto& k : quota) k = std::uniform_int_distribution<Value>(1, 3)(rng);
    const auto input = normalize(GenInstance(g, quota, std::vector<Value>(n, 1), Sense::Pack));
    check_reduction(input, uniformize_packing(input), "uniformize");
    return true;
  });
  counts << " uniformize=" << uniform;

  auto flat = repeat_valid(kWanted, kWanted, [&] {
    const std::size_t n = pick_size(rng, 1, 6);
    const Graph g = random_graph(rng() % 2 ? Family::Gnp : Family::Tree, n, rng);
    const auto input = oracle::random_feasible_instance(g, Sense::Dominate, 3, rng);
    check_reduction(input, flatten_capacities(input, 3), "flatten");
    return true;
  });
  counts << " flatten=" << flat;

  const bool enough = fixed >= 100 && free >= 100 && uniform >= 100 && flat >= 100;
  t.check(enough, [&] { return "too few valid inputs: " + counts.str(); });
  for (std::size_t i = 0; i < fixed + free + uniform + flat; ++i) t.case_done();
  return counts.str();
}

Value ceil_third(std::size_t n) { return static_cast<Value>((n + 2) / 3); }

// 4. gamma(P_n) = P_2(P_n) = ceil(n/3), and signed domination via its value map.
void classical(Tally& t) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const Graph p = Graph::path(n);
    const std::vector<Value> ones(n, 1);
    const auto dom = solve(from_domination(p));
    const auto pack = solve(from_two_packing(p));
    const auto dom_subsets = oracle::subset_optimum(p, ones, Sense::Dominate);
    const auto pack_subsets = oracle::subset_optimum(p, ones, Sense::Pack);
    t.check(dom.method == Method::Greedy && pack.method == Method::Greedy,
            [&] { return "path P_" + std::to_string(n) + " did not take the greedy path"; });
    t.check(dom.optimum == ceil_third(n) && dom_subsets == ceil_third(n),
            [&] { return "gamma(P_" + std::to_string(n) + ")=" + std::to_string(dom.optimum); });
    t.check(pack.optimum == ceil_third(n) && pack_subsets == ceil_third(n),
            [&] { return "P2(P_" + std::to_string(n) + ")=" + std::to_string(pack.optimum); });
    t.case_done();
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      const auto red = from_signed(g);
      const auto best = brute_force(red.output);
      const Value expected = oracle::signed_domination_number(g);
      t.check(red.value_map.apply(best.optimum) == expected, [&] {
        return "signed domination " + std::to_string(red.value_map.apply(best.optimum)) + " vs enumeration " +
               std::to_string(expected) + " on " + show(red.output);
      });
      t.case_done();
    }
  }
}

/// Touches a buffer larger than the last-level cache so every timed run
/// starts cold, whatever its size.
class CacheFlusher {
 public:
  void flush() {
    for (std::size_t i = 0; i < buffer_.size(); i += 64) ++buffer_[i];
    sink_ += buffer_[buffer_.size() / 2];
  }
  unsigned sink() const { return sink_; }

 private:
  std::vector<unsigned char> buffer_ = std::vector<unsigned char>(std::size_t{64} << 20);
  unsigned sink_ = 0;
};

// 5. Linear work and time of greedy_packing on long paths.
void scaling(const AcceptanceOptions& options, Tally& t, std::string& note) {
  const std::size_t sizes[] = {100'000, 1'000'000};
  double best_seconds[2] = {0, 0};
  CacheFlusher flusher;
  for (int s = 0; s < 2; ++s) {
    const std::size_t n = sizes[s];
    const Graph p = Graph::path(n);
    EliminationOrder natural{std::vector<Vertex>(n), OrderKind::StrongElimination};
    std::iota(natural.order.begin(), natural.order.end(), Vertex{0});
    const auto cert = certify(p, natural);
    const auto inst = from_two_packing(p);
    double fastest = 1e9;
    std::uint64_t touches = 0;
    Value weight = 0;
    const int runs = s == 0 ? 31 : 11;
    for (int r = 0; r < runs; ++r) {
      flusher.flush();
      const auto start = Clock::now();
      auto result = greedy_packing(inst, cert);
      const double secs = std::chrono::duration<double>(Clock::now() - start).count();
      fastest = std::min(fastest, secs);
      touches = result.neighborhood_touches;
      weight = result.assignment.weight();
    }
    best_seconds[s] = fastest;
    t.check(touches == n + 2 * (n - 1), [&] {
      return "touches " + std::to_string(touches) + " != n + 2(n-1) for n=" + std::to_string(n);
    });
    t.check(weight == ceil_third(n), [&] { return "wrong 2-packing number on P_" + std::to_string(n); });
    t.case_done();
  }
  const double ratio = best_seconds[1] / best_seconds[0];
  std::ostringstream s;
  s << std::setprecision(3) << "t(1e5)=" << best_seconds[0] * 1e3 << "ms t(1e6)=" << best_seconds[1] * 1e3
    << "ms ratio=" << ratio << " (cold cache, best of runs)";
  note = s.str();
  if (!options.skip_timing) {
    t.check(ratio >= 8.0 && ratio <= 12.0, [&] { return "time ratio outside [8,12]: " + note; });
  }
}

// 6. Ordering verifier against the definition, finder on the 3-sun and trees.
void orderings(Tally& t) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      EliminationOrder o{std::vector<Vertex>(n), OrderKind::StrongElimination};
      std::iota(o.order.begin(), o.order.end(), Vertex{0});
      do {
        const bool fast = static_cast<bool>(verify_strong_elimination(g, o));
        t.check(fast == oracle::literal_strong_elimination(g, o.order),
                [&] { return "verifier disagrees with the definition on n=" + std::to_string(n); });
      } while (std::next_permutation(o.order.begin(), o.order.end()));
      t.case_done();
    }
  }
  const auto sun = find_strong_elimination(oracle::three_sun());
  t.check(!sun.order && sun.exhaustive, [&] { return std::string("3-sun was not rejected"); });

  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const Graph& tree : oracle::all_rooted_trees(n)) {
      // Relabel so that vertex indices carry no structure.
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), Vertex{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Edge> edges;
      for (auto [a, b] : tree.edges()) edges.emplace_back(perm[a], perm[b]);
      for (const Graph& g : {tree, Graph(n, edges)}) {
        const auto found = find_strong_elimination(g);
        t.check(found.order && verify_strong_elimination(g, *found.order) &&
                    oracle::literal_strong_elimination(g, found.order->order),
                [&] { return "tree on " + std::to_string(n) + " vertices was not accepted"; });
      }
      t.case_done();
    }
  }
}

// 7. normalize is idempotent and keeps the optimum.
void normalization(std::mt19937_64& rng, Tally& t) {
  const Family families[] = {Family::Gnp, Family::Tree, Family::Interval};
  for (int i = 0; i < 240; ++i) {
    const Graph g = random_graph(families[i % 3], pick_size(rng, 1, 6), rng);
    const auto inst = oracle::random_feasible_instance(g, pick_sense(rng), 3, rng);
    const auto once = normalize(inst);
    t.check(normalize(once) == once && is_normalized(once), [&] { return "normalize not idempotent on " + show(inst); });
    const auto before = brute_force(inst).optimum;
    const auto after = brute_force(once).optimum;
    t.check(before == after && oracle::optimum(once) == after, [&] {
      return "normalize changed the optimum " + std::to_string(before) + " -> " + std::to_string(after) + " on " +
             show(inst);
    });
    t.case_done();
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> results;
  auto run = [&](int id, std::string title, const std::function<std::string(Tally&)>& body) {
    Tally t;
    const auto start = Clock::now();
    std::string detail;
    try {
      detail = body(t);
    } catch (const std::exception& e) {
      t.check(false, [&] { return std::string("exception: ") + e.what(); });
    }
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.passed = t.ok();
    r.detail = t.summary(std::to_string(t.cases()) + " cases" + (detail.empty() ? "" : ", " + detail));
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    results.push_back(std::move(r));
  };

  run(1, "duality exactness", [&](Tally& t) {
    std::mt19937_64 rng(options.seed + 1);
    duality(rng, t);
    return std::string();
  });
  run(2, "greedy correctness", [&](Tally& t) {
    std::mt19937_64 rng(options.seed + 2);
    greedy_matches_oracle(rng, t);
    return std::string();
  });
  run(3, "reduction value maps", [&](Tally& t) {
    std::mt19937_64 rng(options.seed + 3);
    return reductions(rng, t);
  });
  run(4, "classical cross-checks", [&](Tally& t) {
    classical(t);
    return std::string();
  });
  run(5, "linear-time scaling", [&](Tally& t) {
    std::string note;
    scaling(options, t, note);
    return note;
  });
  run(6, "ordering verifier soundness", [&](Tally& t) {
    orderings(t);
    return std::string();
  });
  run(7, "normalization", [&](Tally& t) {
    std::mt19937_64 rng(options.seed + 7);
    normalization(rng, t);
    return std::string();
  });
  return results;
}

void print_results(std::ostream& out, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.detail << " ("
        << std::fixed << std::setprecision(3) << r.seconds << "s)\n";
  }
  out << (all_passed(results) ? "all criteria passed" : "some criteria FAILED") << '\n';
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

}  // namespace gdf::selftest
