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

#include "bsuitor/generators.hpp"
#include "bsuitor/random.hpp"
#include "bsuitor/static_matcher.hpp"
#include "bsuitor/suitor_state.hpp"
#include "test_support.hpp"

namespace bsuitor {
namespace {

TEST(BFunctionTest, Validates) {
  EXPECT_THROW(BFunction(std::vector<std::uint32_t>{1, 0}), Error);
  const BFunction b = BFunction::Constant(4, 3);
  EXPECT_EQ(b.size(), 4u);
  EXPECT_EQ(b[2], 3u);
  EXPECT_EQ(b.Max(), 3u);
}

TEST(SuitorQueueTest, OrderAndEviction) {
  SuitorQueue q(5, 2);
  EXPECT_FALSE(q.Min());
  EXPECT_FALSE(q.Insert(3, 4.0));
  EXPECT_FALSE(q.Min());  // unsaturated
  EXPECT_FALSE(q.Insert(4, 6.0));
  ASSERT_TRUE(q.Min());
  EXPECT_EQ(q.Min()->node, 3u);
  EXPECT_EQ(q.entries()[0].node, 4u);

  // Ties go to the smaller id.
  const auto evicted = q.Insert(2, 4.0);
  ASSERT_TRUE(evicted);
  EXPECT_EQ(*evicted, 3u);
  EXPECT_EQ(q.Min()->node, 2u);
}

TEST(SuitorQueueTest, ContractErrors) {
  SuitorQueue q(0, 1);
  q.Insert(1, 2.0);
  try {
    q.Insert(1, 3.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAlreadyPresent);
  }
  try {
    q.Insert(2, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWouldNotImprove);
  }
  // Same weight, larger id loses too.
  EXPECT_THROW(q.Insert(3, 2.0), Error);
  try {
    q.Remove(7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPresent);
  }
  q.Remove(1);
  EXPECT_EQ(q.size(), 0u);
}

TEST(MatchingStateTest, MinAfterRemove) {
  MatchingState s(BFunction::Constant(6, 2));
  s.QueueInsert(5, 3, 4.0);
  s.QueueInsert(5, 4, 6.0);
  ASSERT_TRUE(s.QueueMin(5));
  EXPECT_EQ(*s.QueueMin(5), (Proposal{5, 3, 4.0}));
  s.QueueRemove(5, 3);
  EXPECT_FALSE(s.QueueMin(5));  // unsaturated again
  EXPECT_EQ(s.queue(5).entries().back().node, 4u);
  EXPECT_FALSE(s.IsSaturated(5));
  EXPECT_FALSE(s.QueueMin(0));
}

TEST(MatchingStateTest, EmptyState) {
  const MatchingState s(BFunction::Constant(3, 1));
  EXPECT_TRUE(s.MatchingEdges().empty());
  EXPECT_EQ(s.MatchingWeight(), 0.0);
  EXPECT_TRUE(s.CheckSInvariant(DynamicGraph(3)));
}

TEST(MatchingStateTest, SixNodeFinalState) {
  const DynamicGraph g = testing::SixNode();
  const MatchingState s = RunStatic(g, BFunction::Constant(6, 2));
  EXPECT_EQ(s.MatchingEdges().size(), 6u);
  EXPECT_EQ(s.MatchingWeight(), 22.0);
  EXPECT_TRUE(s.CheckSInvariant(g));
  EXPECT_EQ(s.Dump(),
            "0: [1:1, 2:1]\n"
            "1: [0:1, 2:1]\n"
            "2: [0:1, 1:1]\n"
            "3: [4:9, 5:4]\n"
            "4: [3:9, 5:6]\n"
            "5: [4:6, 3:4]\n");
}

TEST(MatchingStateTest, DetectsBrokenInvariant) {
  DynamicGraph g(3);
  g.AddEdge(0, 1, 1.0);
  MatchingState s(BFunction::Constant(3, 1));
  s.QueueInsert(g, 0, 1);
  EXPECT_FALSE(s.CheckSInvariant(g));  // one direction only
  s.QueueInsert(g, 1, 0);
  EXPECT_TRUE(s.CheckSInvariant(g));
  g.RemoveEdge(0, 1);
  EXPECT_FALSE(s.CheckSInvariant(g));  // entry without a live edge
}

TEST(MatchingStateTest, StaticResultsRespectCaps) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const DynamicGraph g = GenGnp(40, 0.2, {}, seed);
    const BFunction b = GenBFunction(40, BSpec::Uniform(1, 4), seed);
    const MatchingState s = RunStatic(g, b);
    ASSERT_TRUE(s.CheckSInvariant(g));
    std::vector<std::uint32_t> degree(40, 0);
    for (const Edge& e : s.MatchingEdges()) {
      ++degree[e.u];
      ++degree[e.v];
    }
    for (NodeId u = 0; u < 40; ++u) {
      EXPECT_LE(degree[u], b[u]);
      EXPECT_EQ(s.IsSaturated(u), s.queue(u).size() == b[u]);
      const auto entries = s.queue(u).entries();
      for (std::size_t i = 1; i < entries.size(); ++i) {
        EXPECT_TRUE(Beats(entries[i - 1].node, entries[i - 1].w,
                          entries[i].node, entries[i].w));
      }
    }
  }
}

}  // namespace
}  // namespace bsuitor
