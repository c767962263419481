#include <gtest/gtest.h>

#include <random>

#include "gdf/error.hpp"
#include "gdf/generators.hpp"
#include "gdf/problems.hpp"
#include "gdf/solvers.hpp"
#include "gdf/transforms.hpp"
#include "helpers.hpp"
#include "selftest/oracles.hpp"

namespace gdf {
namespace {

using testing::natural_order;
using Vals = std::vector<Value>;

TEST(Greedy, PathTwoPacking) {
  const auto r = greedy_packing(from_two_packing(Graph::path(4)), natural_order(4));
  EXPECT_EQ(r.assignment, Assignment(Vals{1, 0, 0, 1}));
  EXPECT_EQ(r.assignment.weight(), 2);
  EXPECT_EQ(r.neighborhood_touches, 4u + 2 * 3);
}

TEST(Greedy, ZeroQuotas) {
  const Graph g = gen_random_tree(20, 3);
  const auto found = find_strong_elimination(g);
  const auto r = greedy_packing(GenInstance::uniform(g, 0, 3, Sense::Pack), *found.order);
  EXPECT_EQ(r.assignment.weight(), 0);
}

TEST(Greedy, CompleteGraph) {
  const auto r = greedy_packing(from_two_packing(Graph::complete(6)), natural_order(6));
  EXPECT_EQ(r.assignment, Assignment(Vals{1, 0, 0, 0, 0, 0}));
}

TEST(Greedy, Errors) {
  EXPECT_THROW(greedy_packing(from_domination(Graph::path(3)), natural_order(3)), Error);
  EXPECT_THROW(greedy_packing(from_two_packing(Graph::cycle(4)), natural_order(4)), Error);
  const auto cert = certify(Graph::path(4), natural_order(4));
  try {
    greedy_packing(from_two_packing(Graph::star(3)), cert);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Structural);
  }
}

TEST(Greedy, PartialAssignmentsStayFeasible) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = trial % 2 ? gen_random_tree(1 + rng() % 15, rng()) : gen_random_interval_graph(1 + rng() % 15, rng());
    const auto inst = oracle::random_instance(g, Sense::Pack, 3, rng);
    const auto cert = certify(g, *find_strong_elimination(g).order);
    std::size_t calls = 0;
    greedy_packing(inst, cert, [&](std::size_t step, std::span<const Value> partial) {
      EXPECT_EQ(step, calls++);
      EXPECT_TRUE(oracle::feasible(inst, partial));
    });
    EXPECT_EQ(calls, g.vertex_count());
  }
}

TEST(Greedy, MatchesOracleOnStronglyChordalGraphs) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 260; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Graph g = trial % 2 ? gen_random_tree(n, rng()) : gen_random_interval_graph(n, rng());
    const auto cert = certify(g, *find_strong_elimination(g).order);
    const auto pack = oracle::random_instance(g, Sense::Pack, 3, rng);
    const auto greedy = greedy_packing(pack, cert);
    EXPECT_TRUE(is_feasible(pack, greedy.assignment));
    EXPECT_EQ(greedy.assignment.weight(), brute_force(pack, {100'000'000}).optimum);
    EXPECT_EQ(greedy.neighborhood_touches, n + 2 * g.edge_count());

    const auto dom = oracle::random_feasible_instance(g, Sense::Dominate, 3, rng);
    const auto via_dual = solve_domination_strongly_chordal(dom, cert);
    EXPECT_TRUE(is_feasible(dom, via_dual.assignment));
    EXPECT_EQ(via_dual.assignment.weight(), brute_force(dom, {100'000'000}).optimum);

    const auto norm = normalize(dom);
    EXPECT_EQ(greedy_packing(dualize(norm).output, cert).assignment.weight() +
                  solve_domination_strongly_chordal(norm, cert).assignment.weight(),
              norm.total_cap());
  }
}

TEST(DominationViaDuality, Examples) {
  EXPECT_EQ(solve_domination_strongly_chordal(from_domination(Graph::path(3)), natural_order(3)).assignment.weight(), 1);
  EXPECT_EQ(solve_domination_strongly_chordal(from_domination(Graph::edgeless(5)), natural_order(5)).assignment.weight(),
            5);
  const Graph star = Graph::star(4);
  const auto tuple = from_k_tuple(star, 2);
  const auto order = testing::order_of({1, 2, 3, 4, 0});
  const auto r = solve_domination_strongly_chordal(tuple, order);
  EXPECT_EQ(r.assignment.weight(), brute_force(tuple).optimum);
  EXPECT_EQ(r.assignment.weight(), 5);
}

TEST(DominationViaDuality, Infeasible) {
  EXPECT_THROW(solve_domination_strongly_chordal(from_k_tuple(Graph::path(2), 3), natural_order(2)), InfeasibleError);
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force(from_two_packing(Graph::cycle(5))).optimum, 1);
  EXPECT_EQ(brute_force(from_domination(Graph::cycle(4))).optimum, 2);
  EXPECT_EQ(brute_force(GenInstance::uniform(Graph::path(3), 0, 2, Sense::Pack)).optimum, 0);
}

TEST(BruteForce, LexicographicallySmallestOptimum) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const Graph g = gen_random_graph(n, 0.5, rng());
    const auto inst = oracle::random_feasible_instance(g, trial % 2 ? Sense::Pack : Sense::Dominate, 2, rng);
    const auto best = brute_force(inst);
    // Plain mixed-radix walk in lexicographic order; first optimal hit.
    Vals f(n, 0);
    std::optional<Vals> first;
    while (true) {
      if (oracle::feasible(inst, f)) {
        const Value w = std::accumulate(f.begin(), f.end(), Value{0});
        if (w == best.optimum && !first) first = f;
      }
      std::size_t i = n;
      while (i > 0 && f[i - 1] == inst.cap(static_cast<Vertex>(i - 1))) f[--i] = 0;
      if (i == 0) break;
      ++f[i - 1];
    }
    EXPECT_EQ(best.optimum, oracle::optimum(inst));
    ASSERT_TRUE(first);
    EXPECT_EQ(Vals(best.assignment.values().begin(), best.assignment.values().end()), *first);
  }
}

TEST(BruteForce, BudgetAndInfeasibility) {
  try {
    brute_force(GenInstance::uniform(gen_random_graph(40, 0.3, 1), 5, 3, Sense::Pack), {1000});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Budget);
  }
  EXPECT_THROW(brute_force(from_k_tuple(Graph::edgeless(2), 2)), InfeasibleError);
}

TEST(Solve, Dispatch) {
  const auto tree = from_domination(gen_random_tree(25, 4));
  const auto s = solve(tree);
  EXPECT_EQ(s.method, Method::Greedy);
  ASSERT_TRUE(s.order);
  EXPECT_TRUE(verify_strong_elimination(tree.graph(), *s.order));
  EXPECT_TRUE(is_feasible(tree, s.assignment));

  const auto cycle = solve(from_domination(Graph::cycle(4)));
  EXPECT_EQ(cycle.method, Method::Oracle);
  EXPECT_EQ(cycle.optimum, 2);

  SolveOptions forced;
  forced.force_oracle = true;
  EXPECT_EQ(solve(from_two_packing(Graph::path(6)), std::nullopt, forced).method, Method::Oracle);
  EXPECT_EQ(solve(from_two_packing(Graph::path(6)), testing::natural_order(6)).optimum, 2);
}

TEST(Solve, SuppliedBadOrderIsAnError) {
  EXPECT_THROW(solve(from_two_packing(Graph::path(3)), testing::order_of({1, 0, 2})), Error);
}

TEST(Solve, RefusesLargeNonChordalInstances) {
  const auto inst = GenInstance::uniform(Graph::cycle(60), 2, 2, Sense::Pack);
  EXPECT_THROW(solve(inst), Error);
}

TEST(Solve, PathsGiveCeilThird) {
  for (std::size_t n = 1; n <= 30; ++n) {
    const Value expected = static_cast<Value>((n + 2) / 3);
    EXPECT_EQ(solve(from_domination(Graph::path(n))).optimum, expected);
    EXPECT_EQ(solve(from_two_packing(Graph::path(n))).optimum, expected);
  }
}

}  // namespace
}  // namespace gdf
