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

using Vals = std::vector<Value>;

/// Value map and lift of `red` checked by brute force on both sides.
void expect_exact(const GenInstance& input, const Reduction& red) {
  const auto in = brute_force(input);
  const auto out = brute_force(red.output);
  EXPECT_EQ(red.value_map.apply(out.optimum), in.optimum);
  const auto lifted = red.lift_assignment(out.assignment);
  EXPECT_TRUE(is_feasible(input, lifted));
  EXPECT_EQ(lifted.weight(), in.optimum);
}

TEST(ValueMap, Apply) {
  EXPECT_EQ((ValueMap{2, -3, false, ""}).apply(5), 7);
  EXPECT_EQ((ValueMap{1, 10, true, ""}).apply(4), 6);
  EXPECT_EQ(ValueMap::identity("x").apply(9), 9);
}

TEST(Dualize, PathDomination) {
  const auto inst = from_domination(Graph::path(3));
  const auto red = dualize(inst);
  EXPECT_EQ(red.output, GenInstance(Graph::path(3), {1, 2, 1}, {1, 1, 1}, Sense::Pack));
  EXPECT_EQ(brute_force(inst).optimum, 1);
  EXPECT_EQ(brute_force(red.output).optimum, 2);
  EXPECT_TRUE(red.value_map.flip);
  EXPECT_EQ(red.value_map.offset, 3);
  EXPECT_EQ(red.value_map.apply(2), 1);
}

TEST(Dualize, TrianglePacking) {
  const auto inst = GenInstance::uniform(Graph::complete(3), 1, 1, Sense::Pack);
  const auto red = dualize(inst);
  EXPECT_EQ(red.output, GenInstance::uniform(Graph::complete(3), 2, 1, Sense::Dominate));
  EXPECT_EQ(brute_force(red.output).optimum, 2);
  EXPECT_EQ(red.value_map.apply(2), brute_force(inst).optimum);
}

TEST(Dualize, InvolutionAndExactness) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = gen_random_graph(1 + rng() % 7, 0.5, rng());
    const auto inst = normalize(oracle::random_feasible_instance(g, trial % 2 ? Sense::Pack : Sense::Dominate, 3, rng));
    const auto red = dualize(inst);
    EXPECT_EQ(dualize(red.output).output, inst);
    expect_exact(inst, red);
  }
}

TEST(Dualize, RejectsQuotaAboveNeighborhoodCap) {
  const GenInstance inst(Graph::path(2), {3, 0}, {1, 1}, Sense::Pack);
  try {
    dualize(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNormalized);
  }
}

TEST(EliminateFixed, AllFreeIsIdentity) {
  const LabelledInstance L(Graph::path(3), 0, 1, 2, {kFree, kFree, kFree}, {1, 2, 1});
  const auto red = eliminate_fixed_labels(L);
  EXPECT_EQ(red.output, L);
  EXPECT_EQ(red.value_map.offset, 0);
}

TEST(EliminateFixed, ClampExample) {
  const LabelledInstance L(Graph::path(3), 0, 1, 1, {Label{1}, kFree, kFree}, {1, 1, 1});
  const auto red = eliminate_fixed_labels(L);
  EXPECT_EQ(red.output, LabelledInstance(Graph::path(3), 0, 1, 1, {Label{0}, kFree, kFree}, {0, 0, 1}));
  EXPECT_EQ(red.value_map.offset, 1);
  EXPECT_EQ(red.value_map.scale, 1);
}

TEST(EliminateFixed, RejectsNonCanonical) {
  const LabelledInstance L(Graph::path(2), -1, 2, 1, {kFree, kFree}, {1, 1});
  EXPECT_THROW(eliminate_fixed_labels(L), Error);
}

TEST(EliminateFixed, MatchesLabelledEnumeration) {
  std::mt19937_64 rng(19);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Graph g = gen_random_graph(n, 0.5, rng());
    const Value levels = 1 + static_cast<Value>(rng() % 3);
    std::vector<Label> labels(n);
    Vals quota(n);
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 2) labels[v] = static_cast<Value>(rng() % (levels + 1));
      quota[v] = static_cast<Value>(rng() % 4);
    }
    const LabelledInstance L(g, 0, 1, levels, labels, quota);
    const auto red = eliminate_fixed_labels(L);
    for (Vertex v = 0; v < n; ++v) {
      EXPECT_EQ(red.output.label(v).has_value(), labels[v].has_value());
      if (labels[v]) EXPECT_EQ(*red.output.label(v), 0);
    }
    const auto before = oracle::labelled_optimum(L, Sense::Dominate);
    const auto after = oracle::labelled_optimum(red.output, Sense::Dominate);
    ASSERT_EQ(before.has_value(), after.has_value());
    if (!before) continue;
    ++feasible;
    EXPECT_EQ(red.value_map.apply(*after), *before);
  }
  EXPECT_GT(feasible, 100);
}

TEST(FreeReduction, NoZeroCapsIsIdentity) {
  const GenInstance inst(Graph::path(3), {1, 1, 1}, {2, 2, 2}, Sense::Pack);
  const auto red = free_reduction(inst, 2);
  EXPECT_EQ(red.output, inst);
}

TEST(FreeReduction, PathWithOneZeroCap) {
  const GenInstance inst(Graph::path(3), {1, 1, 1}, {0, 1, 1}, Sense::Pack);
  const auto red = free_reduction(inst, 1);
  EXPECT_EQ(red.output.size(), 4u);
  EXPECT_TRUE(red.output.graph().adjacent(0, 3));
  EXPECT_EQ(red.output.quota(3), 0);
  EXPECT_EQ(red.output.cap(0), 1);
  const auto out = brute_force(red.output);
  EXPECT_EQ(out.assignment[3], 0);
  expect_exact(inst, red);
}

TEST(FreeReduction, RejectsBadInput) {
  EXPECT_THROW(free_reduction(GenInstance(Graph::path(2), {1, 1}, {1, 1}, Sense::Dominate), 1), Error);
  EXPECT_THROW(free_reduction(GenInstance(Graph::path(2), {1, 1}, {1, 2}, Sense::Pack), 2), Error);
}

TEST(FreeReduction, RandomExactness) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Graph g = gen_random_graph(n, 0.5, rng());
    const Value levels = 1 + static_cast<Value>(rng() % 3);
    Vals quota(n), cap(n);
    for (Vertex v = 0; v < n; ++v) {
      quota[v] = rng() % 4;
      cap[v] = rng() % 3 ? levels : 0;
    }
    const GenInstance inst(g, quota, cap, Sense::Pack);
    const auto red = free_reduction(inst, levels);
    for (Vertex p : red.vertex_map.created) EXPECT_EQ(brute_force(red.output).assignment[p], 0);
    expect_exact(inst, red);
  }
}

TEST(Uniformize, UniformQuotaIsIdentity) {
  const auto inst = normalize(GenInstance::uniform(Graph::cycle(5), 2, 1, Sense::Pack));
  const auto red = uniformize_packing(inst);
  EXPECT_EQ(red.output, inst);
  EXPECT_EQ(red.value_map.offset, 0);
}

TEST(Uniformize, PathExample) {
  const GenInstance inst(Graph::path(3), {1, 2, 1}, {1, 1, 1}, Sense::Pack);
  const auto red = uniformize_packing(inst);
  EXPECT_EQ(red.output.size(), 5u);
  EXPECT_EQ(Vals(red.output.quota().begin(), red.output.quota().end()), Vals(5, 2));
  EXPECT_EQ(red.value_map.offset, -2);
  EXPECT_EQ(brute_force(red.output).optimum, brute_force(inst).optimum + 2);
  expect_exact(inst, red);
}

TEST(Uniformize, RejectsBadInput) {
  EXPECT_THROW(uniformize_packing(GenInstance(Graph::path(2), {1, 1}, {2, 1}, Sense::Pack)), Error);
  EXPECT_THROW(uniformize_packing(GenInstance::uniform(Graph::path(2), 1, 1, Sense::Dominate)), Error);
  EXPECT_THROW(uniformize_packing(GenInstance(Graph::path(2), {5, 1}, {1, 1}, Sense::Pack)), Error);
}

TEST(Uniformize, RandomExactness) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Graph g = gen_random_graph(n, 0.5, rng());
    Vals quota(n);
    for (auto& k : quota) k = 1 + rng() % 3;
    const auto inst = normalize(GenInstance(g, quota, Vals(n, 1), Sense::Pack));
    const auto red = uniformize_packing(inst);
    const Value top = *std::max_element(inst.quota().begin(), inst.quota().end());
    for (Value k : red.output.quota()) EXPECT_EQ(k, top);
    expect_exact(inst, red);
  }
}

TEST(Flatten, UnitCapsIsIdentity) {
  const auto inst = GenInstance::uniform(Graph::path(4), 1, 1, Sense::Dominate);
  EXPECT_EQ(flatten_capacities(inst, 1).output, inst);
}

TEST(Flatten, SingleVertex) {
  const GenInstance inst(Graph::edgeless(1), {2}, {2}, Sense::Dominate);
  const auto red = flatten_capacities(inst, 2);
  EXPECT_EQ(red.output, GenInstance::uniform(Graph::complete(2), 2, 1, Sense::Dominate));
  expect_exact(inst, red);
  EXPECT_EQ(brute_force(red.output).optimum, 2);
}

TEST(Flatten, RejectsBadInput) {
  EXPECT_THROW(flatten_capacities(GenInstance::uniform(Graph::path(2), 1, 1, Sense::Pack), 1), Error);
  EXPECT_THROW(flatten_capacities(GenInstance::uniform(Graph::path(2), 1, 3, Sense::Dominate), 2), Error);
}

TEST(Flatten, RandomTreesExactness) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = gen_random_tree(1 + rng() % 6, rng());
    const auto inst = oracle::random_feasible_instance(g, Sense::Dominate, 3, rng);
    const auto red = flatten_capacities(inst, 3);
    for (Value u : red.output.cap()) EXPECT_LE(u, 1);
    expect_exact(inst, red);
  }
}

// Pendant-only transforms keep strongly chordal graphs strongly chordal.
TEST(Transforms, PendantsKeepStrongOrders) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const Graph g = trial % 2 ? gen_random_tree(n, rng()) : gen_random_interval_graph(n, rng());
    Vals quota(n);
    for (auto& k : quota) k = 1 + rng() % 3;
    const auto inst = normalize(GenInstance(g, quota, Vals(n, 1), Sense::Pack));
    const auto out = uniformize_packing(inst).output.graph();
    const auto found = find_strong_elimination(out);
    ASSERT_TRUE(found.order);
    EXPECT_TRUE(verify_strong_elimination(out, *found.order));
  }
}

TEST(Lift, DescribeMentionsKind) {
  const auto red = flatten_capacities(GenInstance(Graph::path(2), {1, 2}, {1, 2}, Sense::Dominate), 2);
  const auto lines = red.lift.describe();
  ASSERT_FALSE(lines.empty());
  EXPECT_NE(lines.front().find(to_string(LiftKind::CliqueSum)), std::string::npos);
}

}  // namespace
}  // namespace gdf
