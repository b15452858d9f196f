#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tss/exact.hpp"
#include "tss/generate.hpp"

using namespace tss;

TEST(BruteForce, K5Majority) {
  Instance k5 = Instance::majority(fixtures::complete(5), 2);
  EXPECT_EQ(brute_force_min_target_set(k5), (VertexSet{0, 1}));
}

TEST(BruteForce, ZeroThresholds) {
  Instance inst(fixtures::path(4), ThresholdMap(4, 0), 0);
  EXPECT_TRUE(brute_force_min_target_set(inst).empty());
}

TEST(BruteForce, CompleteBipartiteThreeTwo) {
  Instance inst = Instance::majority(fixtures::complete_bipartite(3, 2), 1);
  EXPECT_EQ(inst.thresholds, (ThresholdMap{1, 1, 1, 2, 2}));
  EXPECT_EQ(brute_force_min_target_set(inst), (VertexSet{3}));
  for (Vertex v = 0; v < 3; ++v) EXPECT_FALSE(is_target_set(inst, {v}));
  EXPECT_TRUE(is_target_set(inst, {4}));
}

TEST(BruteForce, Decide) {
  EXPECT_TRUE(brute_force_decide(Instance::majority(fixtures::complete(5), 2)).has_value());
  EXPECT_FALSE(brute_force_decide(Instance::majority(fixtures::complete(5), 1)).has_value());
  Instance full(fixtures::complete(4), ThresholdMap(4, 4), 4);
  auto seed = brute_force_decide(full);
  ASSERT_TRUE(seed.has_value());
  EXPECT_EQ(seed->size(), 4u);
}

TEST(BruteForce, RefusesAboveCap) {
  Instance inst = Instance::majority(fixtures::path(6), 3);
  EXPECT_THROW(brute_force_min_target_set(inst, 5), LimitExceeded);
  EXPECT_THROW(brute_force_decide(inst, 5), LimitExceeded);
  EXPECT_NO_THROW(brute_force_decide(inst, 6));
}

TEST(BruteForce, MatchesMaskOracle) {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_gnp(rng.between(0, 11), rng.chance(0.5) ? 0.25 : 0.55, rng);
    ThresholdMap f(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) f[v] = rng.below(g.degree(v) + 2);
    Instance inst(std::move(g), std::move(f), rng.below(6));
    VertexSet best = brute_force_min_target_set(inst);
    EXPECT_TRUE(is_target_set(inst, best));
    EXPECT_EQ(best.size(), oracle::min_target_set_size(inst));
    auto decided = brute_force_decide(inst);
    EXPECT_EQ(decided.has_value(), best.size() <= inst.budget);
    if (decided) {
      EXPECT_TRUE(is_target_set(inst, *decided));
      EXPECT_LE(decided->size(), inst.budget);
    }
  }
}
