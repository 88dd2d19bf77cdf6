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

#include "bsuitor/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "bsuitor/random.hpp"
#include "bsuitor/static_matcher.hpp"

namespace bsuitor {

namespace {

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

double ToDouble(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kInvalidArgument, "bad " + what + ": '" + s + "'");
}

std::uint64_t ToUnsigned(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used == s.size() && s.find('-') == std::string::npos) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kInvalidArgument, "bad " + what + ": '" + s + "'");
}

std::uint64_t ElapsedNs(std::chrono::steady_clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
}

std::string BSpecName(const BSpec& spec) {
  if (spec.mode == BSpec::Mode::kConstant) {
    return "const:" + std::to_string(spec.lo);
  }
  return "uniform:" + std::to_string(spec.lo) + "," + std::to_string(spec.hi);
}

}  // namespace

// ---------------------------------------------------------------------------

GeneratorSpec ParseGeneratorSpec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  GeneratorSpec spec;
  if (kind == "rmat") {
    spec.kind = GeneratorSpec::Kind::kRmat;
  } else if (kind == "gnp") {
    spec.kind = GeneratorSpec::Kind::kGnp;
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown generator '" + kind + "' (expected rmat or gnp)");
  }
  if (colon == std::string::npos) {
    if (spec.kind == GeneratorSpec::Kind::kGnp) {
      throw Error(ErrorCode::kInvalidArgument, "gnp needs n=..,p=..");
    }
    return spec;
  }

  // Values after "probs=" span several comma-separated fields.
  const auto fields = Split(text.substr(colon + 1), ',');
  bool have_n = false;
  bool have_p = false;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto eq = fields[i].find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "expected key=value, got '" + fields[i] + "'");
    }
    const std::string key = fields[i].substr(0, eq);
    const std::string value = fields[i].substr(eq + 1);
    if (key == "scale") {
      spec.scale = static_cast<std::uint32_t>(ToUnsigned(value, key));
    } else if (key == "ef") {
      spec.edge_factor = static_cast<std::uint32_t>(ToUnsigned(value, key));
    } else if (key == "probs") {
      if (i + 3 >= fields.size()) {
        throw Error(ErrorCode::kInvalidArgument, "probs needs four values");
      }
      spec.probs = {ToDouble(value, key), ToDouble(fields[i + 1], key),
                    ToDouble(fields[i + 2], key), ToDouble(fields[i + 3], key)};
      i += 3;
    } else if (key == "n") {
      spec.n = static_cast<NodeId>(ToUnsigned(value, key));
      have_n = true;
    } else if (key == "p") {
      spec.p = ToDouble(value, key);
      have_p = true;
    } else if (key == "levels") {
      spec.weights.levels = static_cast<std::uint32_t>(ToUnsigned(value, key));
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown key '" + key + "'");
    }
  }
  if (spec.kind == GeneratorSpec::Kind::kGnp && !(have_n && have_p)) {
    throw Error(ErrorCode::kInvalidArgument, "gnp needs n=..,p=..");
  }
  return spec;
}

DynamicGraph Generate(const GeneratorSpec& spec, std::uint64_t seed) {
  if (spec.kind == GeneratorSpec::Kind::kGnp) {
    return GenGnp(spec.n, spec.p, spec.weights, seed);
  }
  return GenRmat(spec.scale, spec.edge_factor, spec.probs, spec.weights, seed);
}

BSpec ParseBSpec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string mode = text.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? "" : text.substr(colon + 1);
  BSpec spec;
  if (mode == "const") {
    spec = BSpec::Constant(static_cast<std::uint32_t>(ToUnsigned(rest, "b")));
  } else if (mode == "uniform") {
    const auto parts = Split(rest, ',');
    if (parts.size() != 2) {
      throw Error(ErrorCode::kInvalidArgument, "uniform needs LO,HI");
    }
    spec = BSpec::Uniform(static_cast<std::uint32_t>(ToUnsigned(parts[0], "b")),
                          static_cast<std::uint32_t>(ToUnsigned(parts[1], "b")));
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "b spec must be const:K or uniform:LO,HI");
  }
  if (spec.lo < 1 || spec.hi < spec.lo) {
    throw Error(ErrorCode::kInvalidArgument, "need 1 <= b");
  }
  return spec;
}

OpKind ParseOpKind(const std::string& text) {
  if (text == "insert") return OpKind::kInsert;
  if (text == "remove") return OpKind::kRemove;
  if (text == "mixed") return OpKind::kMixed;
  throw Error(ErrorCode::kInvalidArgument,
              "op must be insert, remove or mixed");
}

const char* ToString(OpKind op) {
  switch (op) {
    case OpKind::kInsert: return "insert";
    case OpKind::kRemove: return "remove";
    case OpKind::kMixed: return "mixed";
  }
  return "?";
}

// ---------------------------------------------------------------------------

std::vector<EdgeOp> ReadBatch(std::istream& in) {
  std::vector<EdgeOp> ops;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string sign;
    if (!(fields >> sign) || sign.front() == '#') continue;
    EdgeOp op;
    if (sign == "+") {
      op.kind = EdgeOp::Kind::kInsert;
      if (!(fields >> op.u >> op.v >> op.w)) {
        throw ParseError(ErrorCode::kParseError, lineno, "expected '+ u v w'");
      }
    } else if (sign == "-") {
      op.kind = EdgeOp::Kind::kRemove;
      if (!(fields >> op.u >> op.v)) {
        throw ParseError(ErrorCode::kParseError, lineno, "expected '- u v'");
      }
    } else {
      throw ParseError(ErrorCode::kParseError, lineno,
                       "line must start with '+' or '-'");
    }
    std::string extra;
    if (fields >> extra) {
      throw ParseError(ErrorCode::kParseError, lineno, "trailing fields");
    }
    if (op.u == op.v) {
      throw ParseError(ErrorCode::kSelfLoop, lineno, "u == v");
    }
    ops.push_back(op);
  }
  return ops;
}

void WriteBatch(std::ostream& out, std::span<const EdgeOp> ops) {
  for (const EdgeOp& op : ops) {
    if (op.kind == EdgeOp::Kind::kInsert) {
      out << "+ " << op.u << ' ' << op.v << ' ' << FormatWeight(op.w) << '\n';
    } else {
      out << "- " << op.u << ' ' << op.v << '\n';
    }
  }
}

// ---------------------------------------------------------------------------

std::vector<BenchRecord> RunBench(const DynamicGraph& g, const BFunction& b,
                                  const MatchingState& base_state,
                                  const BenchConfig& config) {
  if (config.repetitions < 1 || config.batch_size < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "repetitions and batch size must be >= 1");
  }
  std::vector<BenchRecord> records;
  records.reserve(config.repetitions);
  const SplitMix64 root(config.seed);
  const Weight weight_before = base_state.MatchingWeight();

  // Batches are sampled up front, then the dynamic runs are timed back to
  // back and the static baselines in a second pass. Interleaving a full
  // recompute before each timed update would flush every cache and mostly
  // measure refill latency. Each batch is undone by its inverse; the stable
  // matching is unique, so the state returns to base_state exactly.
  struct Planned {
    std::vector<Edge> inserts;
    std::vector<std::pair<NodeId, NodeId>> removes;
    std::vector<EdgeOp> mixed;
    std::vector<EdgeOp> undo;
  };
  std::vector<Planned> plan(config.repetitions);
  for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
    SplitMix64 rng(root.Split(rep)());
    Planned& p = plan[rep];
    switch (config.op) {
      case OpKind::kInsert:
        p.inserts = SampleInsertBatch(g, config.batch_size, config.weights, rng());
        for (const Edge& e : p.inserts) p.undo.push_back(EdgeOp::Remove(e.u, e.v));
        break;
      case OpKind::kRemove:
        p.removes = SampleRemoveBatch(g, config.batch_size, rng());
        for (const auto& [u, v] : p.removes) {
          p.undo.push_back(EdgeOp::Insert(u, v, g.WeightOf(u, v)));
        }
        break;
      case OpKind::kMixed:
        p.mixed = SampleMixedBatch(g, config.batch_size, config.weights, rng());
        for (auto it = p.mixed.rbegin(); it != p.mixed.rend(); ++it) {
          p.undo.push_back(
              it->kind == EdgeOp::Kind::kInsert
                  ? EdgeOp::Remove(it->u, it->v)
                  : EdgeOp::Insert(it->u, it->v, g.WeightOf(it->u, it->v)));
        }
        break;
    }
  }

  DynamicGraph graph = g;
  MatchingState state = base_state;
  auto apply = [&](const Planned& p) {
    switch (config.op) {
      case OpKind::kInsert:
        return ApplyBatchInsert(graph, state, p.inserts);
      case OpKind::kRemove:
        return ApplyBatchRemove(graph, state, p.removes);
      case OpKind::kMixed:
        break;
    }
    return ApplyBatchMixed(graph, state, p.mixed);
  };

  for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
    BenchRecord rec;
    rec.repetition = rep;
    rec.op = config.op;
    rec.batch_size = config.batch_size;
    rec.matching_weight_before = weight_before;

    const auto dyn_start = std::chrono::steady_clock::now();
    rec.stats = apply(plan[rep]);
    rec.dynamic_time_ns = std::max<std::uint64_t>(ElapsedNs(dyn_start), 1);
    rec.stats.wall_time_ns = rec.dynamic_time_ns;
    rec.matching_weight_after = state.MatchingWeight();

    ApplyBatchMixed(graph, state, plan[rep].undo);
    records.push_back(std::move(rec));
  }

  for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
    BenchRecord& rec = records[rep];
    apply(plan[rep]);
    const auto static_start = std::chrono::steady_clock::now();
    const MatchingState reference = RunStatic(graph, b);
    rec.static_time_ns = std::max<std::uint64_t>(ElapsedNs(static_start), 1);
    rec.speedup = static_cast<double>(rec.static_time_ns) /
                  static_cast<double>(rec.dynamic_time_ns);
    if (config.check) {
      rec.equality_checked = true;
      rec.equality_passed = reference == state &&
                            reference.MatchingEdges() == state.MatchingEdges();
    }
    ApplyBatchMixed(graph, state, plan[rep].undo);
    if (config.check && !(state == base_state)) rec.equality_passed = false;
  }
  return records;
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

double GeometricMean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double log_sum = 0.0;
  for (double v : values) log_sum += std::log(v);
  return std::exp(log_sum / static_cast<double>(values.size()));
}

BenchSummary Summarize(std::span<const BenchRecord> records) {
  BenchSummary s;
  s.records = records.size();
  if (records.empty()) return s;
  std::vector<double> speedups, dyn, stat;
  double affected = 0.0;
  for (const BenchRecord& r : records) {
    speedups.push_back(r.speedup);
    dyn.push_back(static_cast<double>(r.dynamic_time_ns));
    stat.push_back(static_cast<double>(r.static_time_ns));
    affected += static_cast<double>(r.stats.affected_nodes);
    if (r.equality_checked) {
      ++s.checks_run;
      if (!r.equality_passed) ++s.checks_failed;
    }
  }
  s.median_speedup = Median(speedups);
  s.geomean_speedup = GeometricMean(speedups);
  s.median_dynamic_ns = Median(dyn);
  s.median_static_ns = Median(stat);
  s.mean_affected_nodes = affected / static_cast<double>(records.size());
  return s;
}

nlohmann::json ToJson(const UpdateStats& stats) {
  return {{"affected_nodes", stats.affected_nodes},
          {"path_lengths", stats.path_lengths},
          {"loose_ends", stats.loose_ends},
          {"queue_ops", stats.queue_ops},
          {"wall_time_ns", stats.wall_time_ns}};
}

nlohmann::json ToJson(const BenchRecord& r) {
  return {{"type", "record"},
          {"repetition", r.repetition},
          {"op", ToString(r.op)},
          {"batch_size", r.batch_size},
          {"static_time_ns", r.static_time_ns},
          {"dynamic_time_ns", r.dynamic_time_ns},
          {"speedup", r.speedup},
          {"stats", ToJson(r.stats)},
          {"matching_weight_before", r.matching_weight_before},
          {"matching_weight_after", r.matching_weight_after},
          {"equality_checked", r.equality_checked},
          {"equality_passed", r.equality_passed}};
}

nlohmann::json ToJson(const BenchSummary& s) {
  return {{"type", "summary"},
          {"records", s.records},
          {"median_speedup", s.median_speedup},
          {"geomean_speedup", s.geomean_speedup},
          {"median_dynamic_ns", s.median_dynamic_ns},
          {"median_static_ns", s.median_static_ns},
          {"mean_affected_nodes", s.mean_affected_nodes},
          {"checks_run", s.checks_run},
          {"checks_failed", s.checks_failed}};
}

std::string CsvHeader() {
  return "repetition,op,batch_size,static_time_ns,dynamic_time_ns,speedup,"
         "affected_nodes,loose_ends,queue_ops,matching_weight_before,"
         "matching_weight_after,equality_checked,equality_passed";
}

std::string ToCsv(const BenchRecord& r) {
  std::ostringstream out;
  out << r.repetition << ',' << ToString(r.op) << ',' << r.batch_size << ','
      << r.static_time_ns << ',' << r.dynamic_time_ns << ',' << r.speedup
      << ',' << r.stats.affected_nodes << ',' << r.stats.loose_ends << ','
      << r.stats.queue_ops << ',' << FormatWeight(r.matching_weight_before)
      << ',' << FormatWeight(r.matching_weight_after) << ','
      << (r.equality_checked ? 1 : 0) << ',' << (r.equality_passed ? 1 : 0);
  return out.str();
}

// ---------------------------------------------------------------------------

std::optional<std::string> CheckUpdatePaths(std::span<const UpdatePath> paths) {
  for (std::size_t pi = 0; pi < paths.size(); ++pi) {
    const UpdatePath& path = paths[pi];
    const std::string where = "path " + std::to_string(pi) + ": ";
    if (path.nodes.size() != path.steps.size() + 1) {
      return where + "malformed record";
    }
    std::vector<NodeId> nodes = path.nodes;
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
      return where + "repeated node";
    }
    for (std::size_t j = 0; j < path.steps.size(); ++j) {
      const auto expected = j % 2 == 0 ? UpdatePath::Step::kInsert
                                       : UpdatePath::Step::kRemove;
      if (path.steps[j] != expected) {
        return where + "edge " + std::to_string(j) + " breaks alternation";
      }
      if (!path.matched_ok[j]) {
        return where + "edge " + std::to_string(j) +
               (expected == UpdatePath::Step::kInsert
                    ? " did not enter the matching"
                    : " was not matched before removal");
      }
      if (j + 1 < path.steps.size()) {
        // Edges j and j+1 share nodes[j+1]; the earlier one must win there.
        if (!Beats(path.nodes[j], path.weights[j], path.nodes[j + 2],
                   path.weights[j + 1])) {
          return where + "edge " + std::to_string(j + 1) +
                 " does not decrease";
        }
      }
    }
  }
  return std::nullopt;
}

VerifyTrial RunVerifyTrial(const VerifyConfig& config, std::size_t index) {
  SplitMix64 rng = SplitMix64(config.seed).Split(index);
  VerifyTrial trial;
  trial.index = index;
  trial.seed = config.seed;
  trial.n = config.node_counts[rng.NextBelow(config.node_counts.size())];
  trial.p = config.densities[rng.NextBelow(config.densities.size())];
  const BSpec bspec = config.b_specs[rng.NextBelow(config.b_specs.size())];
  trial.b_spec = BSpecName(bspec);
  trial.op = config.ops[rng.NextBelow(config.ops.size())];
  trial.batch_size =
      config.batch_sizes[rng.NextBelow(config.batch_sizes.size())];
  WeightRange weights;
  if (config.tie_levels > 0 && (rng() & 1)) weights.levels = config.tie_levels;

  DynamicGraph g = GenGnp(trial.n, trial.p, weights, rng());
  const BFunction b = GenBFunction(trial.n, bspec, rng());
  MatchingState state = RunStatic(g, b);

  const std::uint64_t non_edges =
      static_cast<std::uint64_t>(trial.n) * (trial.n - 1) / 2 - g.num_edges();
  std::size_t k = trial.batch_size;
  if (trial.op == OpKind::kInsert) k = std::min<std::uint64_t>(k, non_edges);
  if (trial.op == OpKind::kRemove) k = std::min(k, g.num_edges());
  trial.batch_size = k;

  PathRecorder recorder;
  const std::uint64_t batch_seed = rng();
  switch (trial.op) {
    case OpKind::kInsert:
      trial.stats = ApplyBatchInsert(
          g, state, SampleInsertBatch(g, k, weights, batch_seed),
          config.record_paths ? &recorder : nullptr);
      break;
    case OpKind::kRemove:
      trial.stats =
          ApplyBatchRemove(g, state, SampleRemoveBatch(g, k, batch_seed),
                           config.record_paths ? &recorder : nullptr);
      break;
    case OpKind::kMixed:
      trial.stats = ApplyBatchMixed(
          g, state, SampleMixedBatch(g, k, weights, batch_seed),
          config.record_paths ? &recorder : nullptr);
      break;
  }
  const MatchingState reference = RunStatic(g, b);
  trial.equal = state.CheckSInvariant(g) && reference == state &&
                reference.MatchingEdges() == state.MatchingEdges();
  if (config.record_paths) trial.path_violation = CheckUpdatePaths(recorder.paths);
  return trial;
}

VerifyReport RunVerify(const VerifyConfig& config) {
  VerifyReport report;
  for (std::size_t i = 0; i < config.trials; ++i) {
    VerifyTrial trial = RunVerifyTrial(config, i);
    ++report.trials;
    report.paths_checked += trial.stats.path_lengths.size();
    report.loose_ends += trial.stats.loose_ends;
    report.max_loose_end_depth =
        std::max(report.max_loose_end_depth, trial.stats.max_loose_end_depth);
    const bool bad_paths = trial.path_violation.has_value();
    if (!trial.equal) ++report.equality_failures;
    if (bad_paths) ++report.path_failures;
    if ((!trial.equal || bad_paths) && report.failed.size() < 10) {
      report.failed.push_back(std::move(trial));
    }
  }
  return report;
}

}  // namespace bsuitor
