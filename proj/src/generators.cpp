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

#include "bsuitor/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "bsuitor/random.hpp"

namespace bsuitor {

namespace {

void ValidateWeights(const WeightRange& r) {
  if (!(r.lo >= 0.0) || !(r.hi > r.lo) || !std::isfinite(r.hi)) {
    throw Error(ErrorCode::kInvalidArgument,
                "weight range must satisfy 0 <= lo < hi < inf");
  }
}

Weight DrawWeight(SplitMix64& rng, const WeightRange& r) {
  double u = rng.NextUnitOpenClosed();
  if (r.levels > 0) u = std::ceil(u * r.levels) / r.levels;
  return r.lo + (r.hi - r.lo) * u;
}

std::uint64_t PairKey(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

template <typename T>
void Shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.NextBelow(i)]);
  }
}

std::uint64_t NonEdgeCount(const DynamicGraph& g) {
  const std::uint64_t n = g.num_nodes();
  return n * (n - (n > 0 ? 1 : 0)) / 2 - g.num_edges();
}

}  // namespace

DynamicGraph GenGnp(NodeId n, double p, const WeightRange& weights,
                    std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "p must lie in [0, 1]");
  }
  ValidateWeights(weights);
  SplitMix64 coin(seed);
  SplitMix64 wrng = coin.Split(1);
  DynamicGraph g(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin.NextUnit() < p) g.AddEdge(u, v, DrawWeight(wrng, weights));
    }
  }
  return g;
}

DynamicGraph GenRmat(std::uint32_t scale, std::uint32_t edge_factor,
                     RmatProbs probs, const WeightRange& weights,
                     std::uint64_t seed) {
  if (scale < 1 || scale > 31) {
    throw Error(ErrorCode::kInvalidArgument, "scale must lie in [1, 31]");
  }
  const double sum = probs.a + probs.b + probs.c + probs.d;
  if (probs.a < 0 || probs.b < 0 || probs.c < 0 || probs.d < 0 ||
      std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument,
                "R-MAT probabilities must be non-negative and sum to 1");
  }
  ValidateWeights(weights);
  const double cut_a = probs.a / sum;
  const double cut_b = cut_a + probs.b / sum;
  const double cut_c = cut_b + probs.c / sum;

  const NodeId n = NodeId{1} << scale;
  const std::uint64_t target = std::uint64_t{edge_factor} << scale;
  const std::uint64_t max_attempts = 100 * target;

  SplitMix64 rng(seed);
  SplitMix64 wrng = rng.Split(1);
  DynamicGraph g(n);
  g.Reserve(target);
  for (std::uint64_t attempt = 0;
       attempt < max_attempts && g.num_edges() < target; ++attempt) {
    NodeId u = 0;
    NodeId v = 0;
    for (std::uint32_t level = 0; level < scale; ++level) {
      const double x = rng.NextUnit();
      const NodeId row = x >= cut_b;
      const NodeId col = (x >= cut_a && x < cut_b) || x >= cut_c;
      u = (u << 1) | row;
      v = (v << 1) | col;
    }
    if (u == v || g.HasEdge(u, v)) continue;
    g.AddEdge(u, v, DrawWeight(wrng, weights));
  }
  return g;
}

std::vector<Edge> SampleInsertBatch(const DynamicGraph& g, std::size_t k,
                                    const WeightRange& weights,
                                    std::uint64_t seed) {
  ValidateWeights(weights);
  if (k > NonEdgeCount(g)) {
    throw Error(ErrorCode::kNotEnoughCandidates,
                std::to_string(k) + " insertions requested, " +
                    std::to_string(NonEdgeCount(g)) + " non-edges available");
  }
  SplitMix64 rng(seed);
  SplitMix64 wrng = rng.Split(1);
  const NodeId n = g.num_nodes();
  std::vector<std::pair<NodeId, NodeId>> picked;
  std::unordered_set<std::uint64_t> seen;

  const std::uint64_t budget = 64 * static_cast<std::uint64_t>(k) + 1024;
  for (std::uint64_t attempt = 0; picked.size() < k && attempt < budget;
       ++attempt) {
    const auto u = static_cast<NodeId>(rng.NextBelow(n));
    const auto v = static_cast<NodeId>(rng.NextBelow(n));
    if (u == v || g.HasEdge(u, v) || !seen.insert(PairKey(u, v)).second) {
      continue;
    }
    picked.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (picked.size() < k) {
    // Dense graph: enumerate every non-edge and draw from those.
    std::vector<std::pair<NodeId, NodeId>> pool;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (!g.HasEdge(u, v) && !seen.contains(PairKey(u, v))) {
          pool.emplace_back(u, v);
        }
      }
    }
    Shuffle(pool, rng);
    pool.resize(k - picked.size());
    picked.insert(picked.end(), pool.begin(), pool.end());
  }

  std::vector<Edge> batch;
  batch.reserve(k);
  for (const auto& [u, v] : picked) {
    batch.push_back({u, v, DrawWeight(wrng, weights)});
  }
  return batch;
}

std::vector<std::pair<NodeId, NodeId>> SampleRemoveBatch(const DynamicGraph& g,
                                                         std::size_t k,
                                                         std::uint64_t seed) {
  if (k > g.num_edges()) {
    throw Error(ErrorCode::kNotEnoughCandidates,
                std::to_string(k) + " removals requested, graph has " +
                    std::to_string(g.num_edges()) + " edges");
  }
  SplitMix64 rng(seed);
  std::vector<Edge> edges = g.Edges();
  // Partial Fisher-Yates: the first k slots end up a uniform sample.
  std::vector<std::pair<NodeId, NodeId>> batch;
  batch.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.NextBelow(edges.size() - i);
    std::swap(edges[i], edges[j]);
    batch.emplace_back(edges[i].u, edges[i].v);
  }
  return batch;
}

std::vector<EdgeOp> SampleMixedBatch(const DynamicGraph& g, std::size_t k,
                                     const WeightRange& weights,
                                     std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::size_t inserts = 0;
  for (std::size_t i = 0; i < k; ++i) inserts += rng() & 1;
  // Fall back to the other kind when one side has no candidates.
  inserts = std::min<std::size_t>(inserts, NonEdgeCount(g));
  std::size_t removes = k - inserts;
  if (removes > g.num_edges()) {
    removes = g.num_edges();
    inserts = k - removes;
  }

  std::vector<EdgeOp> ops;
  ops.reserve(k);
  for (const Edge& e : SampleInsertBatch(g, inserts, weights, rng.Split(1)())) {
    ops.push_back(EdgeOp::Insert(e.u, e.v, e.w));
  }
  for (const auto& [u, v] : SampleRemoveBatch(g, removes, rng.Split(2)())) {
    ops.push_back(EdgeOp::Remove(u, v));
  }
  Shuffle(ops, rng);
  return ops;
}

BFunction GenBFunction(NodeId n, const BSpec& spec, std::uint64_t seed) {
  if (spec.mode == BSpec::Mode::kConstant) {
    if (spec.lo < 1) throw Error(ErrorCode::kInvalidArgument, "b must be >= 1");
    return BFunction::Constant(n, spec.lo);
  }
  if (spec.lo < 1 || spec.hi < spec.lo) {
    throw Error(ErrorCode::kInvalidArgument, "need 1 <= lo <= hi");
  }
  SplitMix64 rng(seed);
  std::vector<std::uint32_t> goals(n);
  for (auto& g : goals) {
    g = spec.lo + static_cast<std::uint32_t>(rng.NextBelow(spec.hi - spec.lo + 1));
  }
  return BFunction(std::move(goals));
}

}  // namespace bsuitor
