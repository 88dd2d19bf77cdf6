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

// bsuitor: generate graphs, run the static matcher, verify the dynamic
// matcher against it, benchmark update speedups, and trace batch files.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bsuitor/bench.hpp"
#include "bsuitor/dynamic_matcher.hpp"
#include "bsuitor/generators.hpp"
#include "bsuitor/oracle.hpp"
#include "bsuitor/static_matcher.hpp"

namespace {

using namespace bsuitor;

struct GraphSource {
  std::string graph_file;
  std::string gen_spec;
};

void AddGraphOptions(CLI::App* cmd, GraphSource& src) {
  auto* file = cmd->add_option("--graph", src.graph_file, "edge-list file");
  auto* gen = cmd->add_option(
      "--gen", src.gen_spec,
      "generator: rmat:scale=S,ef=F[,probs=a,b,c,d] | gnp:n=N,p=P [,levels=K]");
  file->excludes(gen);
}

DynamicGraph LoadGraph(const GraphSource& src, std::uint64_t seed) {
  if (!src.graph_file.empty()) {
    std::ifstream in(src.graph_file);
    if (!in) throw std::runtime_error("cannot open " + src.graph_file);
    return ReadEdgeList(in);
  }
  if (!src.gen_spec.empty()) return Generate(ParseGeneratorSpec(src.gen_spec), seed);
  throw std::runtime_error("need --graph or --gen");
}

// Output goes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::uint64_t NowNs(std::chrono::steady_clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
}

int CmdGen(const GraphSource& src, std::uint64_t seed, const std::string& out) {
  const DynamicGraph g = LoadGraph(src, seed);
  Output o(out);
  WriteEdgeList(o.stream(), g);
  return 0;
}

int CmdRunStatic(const GraphSource& src, const std::string& b_spec,
                 std::uint64_t seed, bool dump, const std::string& out) {
  const DynamicGraph g = LoadGraph(src, seed);
  const BFunction b = GenBFunction(g.num_nodes(), ParseBSpec(b_spec), seed);
  const auto start = std::chrono::steady_clock::now();
  const MatchingState s = RunStatic(g, b);
  const std::uint64_t ns = NowNs(start);
  Output o(out);
  o.stream() << nlohmann::json{{"nodes", g.num_nodes()},
                               {"edges", g.num_edges()},
                               {"matching_edges", s.MatchingEdges().size()},
                               {"matching_weight", s.MatchingWeight()},
                               {"time_ns", ns}}
                    .dump()
             << '\n';
  if (dump) o.stream() << s.Dump();
  return 0;
}

int CmdVerify(const VerifyConfig& config, bool strict_paths,
              const std::string& out) {
  const VerifyReport r = RunVerify(config);
  nlohmann::json failed = nlohmann::json::array();
  for (const VerifyTrial& t : r.failed) {
    failed.push_back({{"index", t.index},
                      {"seed", t.seed},
                      {"n", t.n},
                      {"p", t.p},
                      {"b", t.b_spec},
                      {"op", ToString(t.op)},
                      {"batch_size", t.batch_size},
                      {"equal", t.equal},
                      {"path_violation", t.path_violation.value_or("")}});
  }
  Output o(out);
  o.stream() << nlohmann::json{{"trials", r.trials},
                               {"equality_failures", r.equality_failures},
                               {"path_failures", r.path_failures},
                               {"paths_checked", r.paths_checked},
                               {"loose_ends", r.loose_ends},
                               {"max_loose_end_depth", r.max_loose_end_depth},
                               {"failed", failed}}
                    .dump()
             << '\n';
  if (r.equality_failures > 0) return 1;
  return strict_paths && r.path_failures > 0 ? 1 : 0;
}

int CmdBench(const GraphSource& src, const std::string& b_spec,
             const BenchConfig& config, const std::string& format,
             const std::string& out) {
  const DynamicGraph g = LoadGraph(src, config.seed);
  const BFunction b = GenBFunction(g.num_nodes(), ParseBSpec(b_spec), config.seed);
  const MatchingState base = RunStatic(g, b);
  const auto records = RunBench(g, b, base, config);
  const BenchSummary summary = Summarize(records);
  Output o(out);
  if (format == "csv") {
    o.stream() << CsvHeader() << '\n';
    for (const BenchRecord& r : records) o.stream() << ToCsv(r) << '\n';
  } else {
    for (const BenchRecord& r : records) o.stream() << ToJson(r).dump() << '\n';
    o.stream() << ToJson(summary).dump() << '\n';
  }
  return summary.checks_failed == 0 ? 0 : 1;
}

int CmdTrace(const GraphSource& src, const std::string& b_spec,
             const std::string& batch_file, std::uint64_t seed,
             const std::string& out) {
  DynamicGraph g = LoadGraph(src, seed);
  const BFunction b = GenBFunction(g.num_nodes(), ParseBSpec(b_spec), seed);
  MatchingState s = RunStatic(g, b);
  std::ifstream in(batch_file);
  if (!in) throw std::runtime_error("cannot open " + batch_file);
  const std::vector<EdgeOp> ops = ReadBatch(in);

  Output o(out);
  std::size_t index = 0;
  for (const EdgeOp& op : ops) {
    const auto start = std::chrono::steady_clock::now();
    UpdateStats st = op.kind == EdgeOp::Kind::kInsert
                         ? ApplyInsert(g, s, op.u, op.v, op.w)
                         : ApplyRemove(g, s, op.u, op.v);
    st.wall_time_ns = NowNs(start);
    nlohmann::json line = ToJson(st);
    line["index"] = index++;
    line["op"] = op.kind == EdgeOp::Kind::kInsert ? "insert" : "remove";
    line["u"] = op.u;
    line["v"] = op.v;
    if (op.kind == EdgeOp::Kind::kInsert) line["w"] = op.w;
    line["matching_weight"] = s.MatchingWeight();
    o.stream() << line.dump() << '\n';
  }
  const bool equal = CheckStaticEquivalence(g, b, s);
  o.stream() << nlohmann::json{{"type", "final"},
                               {"matching_edges", s.MatchingEdges().size()},
                               {"matching_weight", s.MatchingWeight()},
                               {"static_equivalent", equal}}
                    .dump()
             << '\n';
  return equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Static and dynamic b-Suitor matching"};
  app.require_subcommand(1);

  GraphSource src;
  std::uint64_t seed = 1;
  std::string out;
  std::string b_spec = "const:1";

  auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen->add_option("--gen", src.gen_spec, "generator spec")->required();
  gen->add_option("--seed", seed);
  gen->add_option("--out", out);

  bool dump = false;
  auto* run_static = app.add_subcommand("run-static", "run the static matcher");
  AddGraphOptions(run_static, src);
  run_static->add_option("--b", b_spec, "const:K | uniform:LO,HI");
  run_static->add_option("--seed", seed);
  run_static->add_option("--out", out);
  run_static->add_flag("--dump", dump, "print every suitor queue");

  VerifyConfig verify_config;
  bool strict_paths = false;
  auto* verify = app.add_subcommand(
      "verify", "random trials comparing dynamic updates to static reruns");
  verify->add_option("--trials", verify_config.trials);
  verify->add_option("--seed", verify_config.seed);
  verify->add_option("--out", out);
  verify->add_flag("--strict-paths", strict_paths,
                   "also fail on update-path shape violations");

  BenchConfig bench_config;
  std::string op = "insert";
  std::string format = "json";
  auto* bench = app.add_subcommand("bench", "measure update speedups");
  AddGraphOptions(bench, src);
  bench->add_option("--b", b_spec);
  bench->add_option("--op", op)->check(CLI::IsMember({"insert", "remove", "mixed"}));
  bench->add_option("--batch", bench_config.batch_size)->check(CLI::PositiveNumber);
  bench->add_option("--reps", bench_config.repetitions)->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_config.seed);
  bench->add_flag("--check", bench_config.check, "compare against static reruns");
  bench->add_option("--out", out);
  bench->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  std::string batch_file;
  auto* trace = app.add_subcommand("trace", "apply a batch file update by update");
  AddGraphOptions(trace, src);
  trace->add_option("--b", b_spec);
  trace->add_option("--batch-file", batch_file)->required();
  trace->add_option("--seed", seed);
  trace->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return CmdGen(src, seed, out);
    if (*run_static) return CmdRunStatic(src, b_spec, seed, dump, out);
    if (*verify) return CmdVerify(verify_config, strict_paths, out);
    if (*bench) {
      bench_config.op = ParseOpKind(op);
      return CmdBench(src, b_spec, bench_config, format, out);
    }
    if (*trace) return CmdTrace(src, b_spec, batch_file, seed, out);
  } catch (const std::exception& e) {
    std::cerr << "bsuitor: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
