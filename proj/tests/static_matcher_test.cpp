// Copyright 2026 The bsuitor Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "bsuitor/generators.hpp"
#include "bsuitor/random.hpp"
#include "bsuitor/static_matcher.hpp"
#include "test_support.hpp"

namespace bsuitor {
namespace {

using testing::QueueMembers;

TEST(RunStaticTest, SixNodeQueues) {
  const MatchingState s = RunStatic(testing::SixNode(), BFunction::Constant(6, 2));
  EXPECT_EQ(s.MatchingWeight(), 22.0);
  const std::vector<std::vector<NodeId>> expected = {
      {1, 2}, {0, 2}, {0, 1}, {4, 5}, {3, 5}, {3, 4}};
  for (NodeId u = 0; u < 6; ++u) {
    EXPECT_EQ(QueueMembers(s, u), expected[u]) << "node " << u;
  }
  const std::vector<Edge> m = {{0, 1, 1}, {0, 2, 1}, {1, 2, 1},
                               {3, 4, 9}, {3, 5, 4}, {4, 5, 6}};
  EXPECT_EQ(s.MatchingEdges(), m);
}

TEST(RunStaticTest, SmallCases) {
  EXPECT_TRUE(RunStatic(DynamicGraph(0), BFunction{}).MatchingEdges().empty());
  EXPECT_TRUE(
      RunStatic(DynamicGraph(5), BFunction::Constant(5, 2)).MatchingEdges().empty());

  DynamicGraph path(3);
  path.AddEdge(0, 1, 2);
  path.AddEdge(1, 2, 3);
  const MatchingState s = RunStatic(path, BFunction::Constant(3, 1));
  EXPECT_EQ(s.MatchingEdges(), (std::vector<Edge>{{1, 2, 3}}));
  EXPECT_EQ(s.MatchingWeight(), 3.0);
}

TEST(RunStaticTest, RejectsBadArguments) {
  const DynamicGraph g = testing::SixNode();
  EXPECT_THROW(RunStatic(g, BFunction::Constant(5, 2)), Error);
  const std::vector<NodeId> not_perm = {0, 1, 2, 3, 4, 4};
  EXPECT_THROW(RunStatic(g, BFunction::Constant(6, 2), not_perm), Error);
  const std::vector<NodeId> short_order = {0, 1};
  EXPECT_THROW(RunStatic(g, BFunction::Constant(6, 2), short_order), Error);
}

// The suitor result must be the greedy result under the global edge order,
// ties included.
TEST(RunStaticTest, MatchesGreedyReference) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const NodeId n = 5 + static_cast<NodeId>(seed % 60);
    WeightRange w;
    if (seed % 2) w.levels = 3;
    const DynamicGraph g = GenGnp(n, 0.05 + 0.1 * (seed % 7), w, seed);
    const BFunction b = GenBFunction(n, BSpec::Uniform(1, 1 + seed % 4), seed);
    const MatchingState s = RunStatic(g, b);
    ASSERT_TRUE(s.CheckSInvariant(g));
    ASSERT_EQ(s.MatchingEdges(), testing::GreedyReference(g, b)) << seed;
  }
}

TEST(RunStaticTest, OrderInvariance) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DynamicGraph g = GenGnp(40, 0.2, {0, 1, 2}, seed);
    const BFunction b = GenBFunction(40, BSpec::Uniform(1, 3), seed);
    const MatchingState base = RunStatic(g, b);
    std::vector<NodeId> order(40);
    std::iota(order.begin(), order.end(), 0);
    SplitMix64 rng(seed);
    for (int k = 0; k < 5; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      EXPECT_EQ(RunStatic(g, b, order), base);
    }
  }
}

TEST(FindPartnerTest, IsolatedNode) {
  const DynamicGraph g(3);
  const MatchingState s(BFunction::Constant(3, 1));
  EXPECT_FALSE(FindPartner(g, s, 1));
}

TEST(FindPartnerTest, PicksBestQualifyingNeighbor) {
  const DynamicGraph g = testing::SixNode();
  MatchingState s(BFunction::Constant(6, 2));
  const auto p = FindPartner(g, s, 5);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->node, 4u);

  // Saturate v4 with stronger suitors than v5; v3 is next.
  s.QueueInsert(4, 3, 9);
  s.QueueInsert(3, 4, 9);
  DynamicGraph g2 = g;
  g2.AddEdge(4, 0, 7);
  s.QueueInsert(4, 0, 7);
  s.QueueInsert(0, 4, 7);
  const auto q = FindPartner(g2, s, 5);
  ASSERT_TRUE(q);
  EXPECT_EQ(q->node, 3u);
  EXPECT_EQ(q->w, 4.0);
}

// Centre 0 with leaves 1..4; every leaf is saturated with a heavier edge.
TEST(FindPartnerTest, StarWithHeavierMinima) {
  DynamicGraph g(9);
  MatchingState s(BFunction::Constant(9, 1));
  for (NodeId leaf = 1; leaf <= 4; ++leaf) {
    g.AddEdge(0, leaf, 1.0);
    g.AddEdge(leaf, leaf + 4, 2.0);
    s.QueueInsert(leaf, leaf + 4, 2.0);
    s.QueueInsert(leaf + 4, leaf, 2.0);
  }
  EXPECT_FALSE(FindPartner(g, s, 0));
  // Exhaustive check of the predicate.
  for (const Neighbor& nb : g.Neighbors(0)) {
    const auto min = s.queue(nb.node).Min();
    ASSERT_TRUE(min);
    EXPECT_FALSE(Beats(0, nb.w, min->node, min->w));
  }
  // An equal-weight leaf edge loses the tie only when its holder has a smaller id.
  g.RemoveEdge(0, 1);
  g.AddEdge(0, 1, 2.0);
  const auto p = FindPartner(g, s, 0);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->node, 1u);  // 0 < 5 wins the tie at node 1
}

}  // namespace
}  // namespace bsuitor
