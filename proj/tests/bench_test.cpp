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
#include <cmath>
#include <sstream>

#include "bsuitor/bench.hpp"
#include "bsuitor/static_matcher.hpp"

namespace bsuitor {
namespace {

TEST(SpecParseTest, Generator) {
  const GeneratorSpec r = ParseGeneratorSpec("rmat:scale=12,ef=4,probs=0.55,0.15,0.15,0.15");
  EXPECT_EQ(r.kind, GeneratorSpec::Kind::kRmat);
  EXPECT_EQ(r.scale, 12u);
  EXPECT_EQ(r.edge_factor, 4u);
  EXPECT_DOUBLE_EQ(r.probs.a, 0.55);
  EXPECT_DOUBLE_EQ(r.probs.d, 0.15);

  const GeneratorSpec g = ParseGeneratorSpec("gnp:n=100,p=0.25,levels=3");
  EXPECT_EQ(g.kind, GeneratorSpec::Kind::kGnp);
  EXPECT_EQ(g.n, 100u);
  EXPECT_DOUBLE_EQ(g.p, 0.25);
  EXPECT_EQ(g.weights.levels, 3u);
  EXPECT_EQ(Generate(g, 1).num_nodes(), 100u);

  EXPECT_THROW(ParseGeneratorSpec("ba:n=3"), Error);
  EXPECT_THROW(ParseGeneratorSpec("gnp:n=10"), Error);
  EXPECT_THROW(ParseGeneratorSpec("rmat:scale=x"), Error);
  EXPECT_THROW(ParseGeneratorSpec("rmat:probs=0.5,0.5"), Error);
  EXPECT_THROW(ParseGeneratorSpec("rmat:depth=3"), Error);
}

TEST(SpecParseTest, BAndOp) {
  const BSpec c = ParseBSpec("const:3");
  EXPECT_EQ(c.mode, BSpec::Mode::kConstant);
  EXPECT_EQ(c.lo, 3u);
  const BSpec u = ParseBSpec("uniform:1,10");
  EXPECT_EQ(u.mode, BSpec::Mode::kUniform);
  EXPECT_EQ(u.hi, 10u);
  EXPECT_THROW(ParseBSpec("const:0"), Error);
  EXPECT_THROW(ParseBSpec("uniform:5,2"), Error);
  EXPECT_THROW(ParseBSpec("uniform:5"), Error);
  EXPECT_THROW(ParseBSpec("poisson:3"), Error);

  for (OpKind op : {OpKind::kInsert, OpKind::kRemove, OpKind::kMixed}) {
    EXPECT_EQ(ParseOpKind(ToString(op)), op);
  }
  EXPECT_THROW(ParseOpKind("swap"), Error);
}

TEST(BatchFileTest, RoundTrip) {
  const std::vector<EdgeOp> ops = {EdgeOp::Insert(0, 5, 0.1 + 0.2),
                                   EdgeOp::Remove(3, 4),
                                   EdgeOp::Insert(7, 2, 1e-9)};
  std::ostringstream out;
  WriteBatch(out, ops);
  std::istringstream in("# header\n\n" + out.str());
  EXPECT_EQ(ReadBatch(in), ops);
}

TEST(BatchFileTest, Errors) {
  const std::pair<const char*, std::size_t> cases[] = {
      {"+ 1 2\n", 1}, {"# c\n- 1\n", 2}, {"* 1 2\n", 1},
      {"- 1 2 3\n", 1}, {"+ 1 1 2\n", 1}};
  for (const auto& [text, line] : cases) {
    std::istringstream in(text);
    try {
      ReadBatch(in);
      ADD_FAILURE() << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text;
    }
  }
}

TEST(SummaryTest, MedianAndGeomean) {
  EXPECT_EQ(Median({}), 0.0);
  EXPECT_EQ(Median({3, 1, 2}), 2.0);
  EXPECT_EQ(Median({4, 1, 2, 3}), 2.5);
  const std::vector<double> v = {1, 10, 100};
  EXPECT_NEAR(GeometricMean(v), 10.0, 1e-12);

  std::vector<BenchRecord> recs(3);
  recs[0].speedup = 2;
  recs[1].speedup = 8;
  recs[2].speedup = 4;
  recs[1].equality_checked = true;
  recs[1].equality_passed = false;
  recs[2].stats.affected_nodes = 6;
  const BenchSummary s = Summarize(recs);
  EXPECT_EQ(s.records, 3u);
  EXPECT_EQ(s.median_speedup, 4.0);
  EXPECT_NEAR(s.geomean_speedup, 4.0, 1e-12);
  EXPECT_EQ(s.checks_run, 1u);
  EXPECT_EQ(s.checks_failed, 1u);
  EXPECT_EQ(s.mean_affected_nodes, 2.0);
}

TEST(RunBenchTest, ChecksPassAndStateUntouched) {
  const DynamicGraph g = GenRmat(8, 8, kRmatG, {}, 4);
  const BFunction b = BFunction::Constant(g.num_nodes(), 2);
  const MatchingState base = RunStatic(g, b);
  for (OpKind op : {OpKind::kInsert, OpKind::kRemove, OpKind::kMixed}) {
    BenchConfig config;
    config.op = op;
    config.batch_size = 20;
    config.repetitions = 5;
    config.check = true;
    const auto records = RunBench(g, b, base, config);
    ASSERT_EQ(records.size(), 5u);
    for (const BenchRecord& r : records) {
      EXPECT_TRUE(r.equality_checked);
      EXPECT_TRUE(r.equality_passed);
      EXPECT_GT(r.speedup, 0.0);
      EXPECT_EQ(r.batch_size, 20u);
      EXPECT_EQ(r.matching_weight_before, base.MatchingWeight());
    }
    const nlohmann::json j = ToJson(records[0]);
    EXPECT_EQ(j["type"], "record");
    EXPECT_EQ(j["op"], ToString(op));
    EXPECT_TRUE(j.contains("stats"));
    const std::string header = CsvHeader();
    const std::string row = ToCsv(records[0]);
    EXPECT_EQ(std::count(header.begin(), header.end(), ','),
              std::count(row.begin(), row.end(), ','));
  }
  BenchConfig bad;
  bad.repetitions = 0;
  EXPECT_THROW(RunBench(g, b, base, bad), Error);
}

TEST(VerifyTest, SmallRunPassesEquality) {
  VerifyConfig config;
  config.trials = 150;
  config.seed = 77;
  const VerifyReport report = RunVerify(config);
  EXPECT_EQ(report.trials, 150u);
  EXPECT_EQ(report.equality_failures, 0u);
  EXPECT_GT(report.paths_checked, 0u);
  // Same index, same trial.
  const VerifyTrial a = RunVerifyTrial(config, 17);
  const VerifyTrial b = RunVerifyTrial(config, 17);
  EXPECT_EQ(a.seed, b.seed);
  EXPECT_EQ(a.n, b.n);
  EXPECT_EQ(a.stats.queue_ops, b.stats.queue_ops);
}

UpdatePath MakePath(std::vector<NodeId> nodes, std::vector<Weight> weights) {
  UpdatePath p;
  p.nodes = std::move(nodes);
  p.weights = std::move(weights);
  for (std::size_t j = 0; j < p.weights.size(); ++j) {
    p.steps.push_back(j % 2 ? UpdatePath::Step::kRemove
                            : UpdatePath::Step::kInsert);
    p.matched_ok.push_back(true);
  }
  return p;
}

TEST(CheckUpdatePathsTest, Violations) {
  std::vector<UpdatePath> ok = {MakePath({0, 1, 2, 3}, {5, 4, 3}),
                                MakePath({7}, {})};
  EXPECT_FALSE(CheckUpdatePaths(ok));

  // Equal weights: the tie goes by id at the shared node.
  std::vector<UpdatePath> tie = {MakePath({0, 1, 2}, {4, 4})};
  EXPECT_FALSE(CheckUpdatePaths(tie));
  std::vector<UpdatePath> tie_bad = {MakePath({2, 1, 0}, {4, 4})};
  EXPECT_TRUE(CheckUpdatePaths(tie_bad));

  std::vector<UpdatePath> rising = {MakePath({0, 1, 2}, {3, 5})};
  EXPECT_NE(CheckUpdatePaths(rising)->find("decrease"), std::string::npos);

  std::vector<UpdatePath> loop = {MakePath({0, 1, 2, 0}, {5, 4, 3})};
  EXPECT_NE(CheckUpdatePaths(loop)->find("repeated"), std::string::npos);

  UpdatePath swapped = MakePath({0, 1, 2}, {5, 4});
  swapped.steps[1] = UpdatePath::Step::kInsert;
  std::vector<UpdatePath> alt = {swapped};
  EXPECT_NE(CheckUpdatePaths(alt)->find("alternation"), std::string::npos);

  UpdatePath unmatched = MakePath({0, 1}, {5});
  unmatched.matched_ok[0] = false;
  std::vector<UpdatePath> um = {unmatched};
  EXPECT_TRUE(CheckUpdatePaths(um));
}

}  // namespace
}  // namespace bsuitor
