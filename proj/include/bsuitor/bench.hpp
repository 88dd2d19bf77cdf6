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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bsuitor/dynamic_matcher.hpp"
#include "bsuitor/generators.hpp"
#include "bsuitor/graph.hpp"
#include "bsuitor/suitor_state.hpp"

#include "json.hpp"

namespace bsuitor {

// ---------------------------------------------------------------------------
// Specs parsed from the command line
// ---------------------------------------------------------------------------

/// "rmat:scale=S,ef=F[,probs=a,b,c,d]" or "gnp:n=N,p=P". Both accept
/// "levels=K" for quantized weights. Probabilities default to rmat-er.
struct GeneratorSpec {
  enum class Kind { kRmat, kGnp };
  Kind kind = Kind::kRmat;
  std::uint32_t scale = 10;
  std::uint32_t edge_factor = 8;
  RmatProbs probs = kRmatEr;
  NodeId n = 0;
  double p = 0.0;
  WeightRange weights;
};

GeneratorSpec ParseGeneratorSpec(const std::string& text);
DynamicGraph Generate(const GeneratorSpec& spec, std::uint64_t seed);

/// "const:K" or "uniform:LO,HI".
BSpec ParseBSpec(const std::string& text);

enum class OpKind { kInsert, kRemove, kMixed };
OpKind ParseOpKind(const std::string& text);
const char* ToString(OpKind op);

// ---------------------------------------------------------------------------
// Batch file: "+ u v w" inserts, "- u v" removes, '#' comments
// ---------------------------------------------------------------------------

std::vector<EdgeOp> ReadBatch(std::istream& in);
void WriteBatch(std::ostream& out, std::span<const EdgeOp> ops);

// ---------------------------------------------------------------------------
// Benchmark
// ---------------------------------------------------------------------------

struct BenchConfig {
  OpKind op = OpKind::kInsert;
  std::size_t batch_size = 1;
  std::size_t repetitions = 50;
  std::uint64_t seed = 1;
  bool check = false;
  WeightRange weights;
};

struct BenchRecord {
  std::size_t repetition = 0;
  OpKind op = OpKind::kInsert;
  std::size_t batch_size = 0;
  std::uint64_t static_time_ns = 0;
  std::uint64_t dynamic_time_ns = 0;
  double speedup = 0.0;
  UpdateStats stats;
  Weight matching_weight_before = 0.0;
  Weight matching_weight_after = 0.0;
  bool equality_checked = false;
  bool equality_passed = false;
};

struct BenchSummary {
  std::size_t records = 0;
  double median_speedup = 0.0;
  double geomean_speedup = 0.0;
  double median_dynamic_ns = 0.0;
  double median_static_ns = 0.0;
  double mean_affected_nodes = 0.0;
  std::size_t checks_run = 0;
  std::size_t checks_failed = 0;
};

/// Samples `repetitions` batches, times the update routine on each (undoing it
/// afterwards), then in a second pass times a full static run on each updated
/// graph. Sampling, undo and the optional equality check are untimed.
/// `base_state` must be RunStatic(g, b).
std::vector<BenchRecord> RunBench(const DynamicGraph& g, const BFunction& b,
                                  const MatchingState& base_state,
                                  const BenchConfig& config);

BenchSummary Summarize(std::span<const BenchRecord> records);

double Median(std::vector<double> values);
double GeometricMean(std::span<const double> values);

nlohmann::json ToJson(const UpdateStats& stats);
nlohmann::json ToJson(const BenchRecord& record);
nlohmann::json ToJson(const BenchSummary& summary);

std::string CsvHeader();
std::string ToCsv(const BenchRecord& record);

// ---------------------------------------------------------------------------
// Randomized verification against static recomputation
// ---------------------------------------------------------------------------

struct VerifyConfig {
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::vector<NodeId> node_counts{16, 64, 256};
  std::vector<double> densities{0.02, 0.1, 0.3};
  std::vector<BSpec> b_specs{BSpec::Constant(1), BSpec::Constant(2),
                             BSpec::Constant(3), BSpec::Constant(10),
                             BSpec::Uniform(1, 10)};
  std::vector<std::size_t> batch_sizes{1, 10, 100};
  std::vector<OpKind> ops{OpKind::kInsert, OpKind::kRemove, OpKind::kMixed};
  /// Quantized weight levels for a share of the trials; 0 disables.
  std::uint32_t tie_levels = 4;
  bool record_paths = true;
};

struct VerifyTrial {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  NodeId n = 0;
  double p = 0.0;
  std::string b_spec;
  OpKind op = OpKind::kInsert;
  std::size_t batch_size = 0;
  bool equal = false;
  std::optional<std::string> path_violation;
  UpdateStats stats;
};

struct VerifyReport {
  std::size_t trials = 0;
  std::size_t equality_failures = 0;
  std::size_t path_failures = 0;
  std::size_t paths_checked = 0;
  std::uint32_t max_loose_end_depth = 0;
  std::uint64_t loose_ends = 0;
  std::vector<VerifyTrial> failed;  // first few failing trials

  bool ok() const { return equality_failures == 0 && path_failures == 0; }
};

/// One trial: draw G(n,p), b and a batch from the grid, apply the batch and
/// compare against static recomputation; with path recording on, also check
/// every traversed update path.
VerifyTrial RunVerifyTrial(const VerifyConfig& config, std::size_t index);
VerifyReport RunVerify(const VerifyConfig& config);

/// Checks, for every recorded path: strictly decreasing proposals at each
/// shared node, no repeated node, and insert/remove alternation by parity.
/// Returns a description of the first violation.
std::optional<std::string> CheckUpdatePaths(std::span<const UpdatePath> paths);

}  // namespace bsuitor
