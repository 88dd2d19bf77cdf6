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

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "bsuitor/dynamic_matcher.hpp"
#include "bsuitor/graph.hpp"
#include "bsuitor/suitor_state.hpp"

namespace bsuitor {

/// Edge weights drawn uniformly from (lo, hi]. With `levels` > 0 the draw is
/// snapped up to one of `levels` evenly spaced values, which produces many
/// equal weights and exercises the tie-break.
struct WeightRange {
  double lo = 0.0;
  double hi = 1.0;
  std::uint32_t levels = 0;
};

/// G(n, p): every unordered pair independently with probability p.
DynamicGraph GenGnp(NodeId n, double p, const WeightRange& weights,
                    std::uint64_t seed);

struct RmatProbs {
  double a = 0.25, b = 0.25, c = 0.25, d = 0.25;
};

inline constexpr RmatProbs kRmatEr{0.25, 0.25, 0.25, 0.25};
inline constexpr RmatProbs kRmatG{0.45, 0.15, 0.15, 0.25};
inline constexpr RmatProbs kRmatB{0.55, 0.15, 0.15, 0.15};

/// R-MAT on 2^scale nodes with edge_factor * 2^scale target edges. Self loops
/// and duplicates are re-drawn, up to 100 * target attempts in total.
DynamicGraph GenRmat(std::uint32_t scale, std::uint32_t edge_factor,
                     RmatProbs probs, const WeightRange& weights,
                     std::uint64_t seed);

/// k distinct non-edges with fresh weights. Throws kNotEnoughCandidates.
std::vector<Edge> SampleInsertBatch(const DynamicGraph& g, std::size_t k,
                                    const WeightRange& weights,
                                    std::uint64_t seed);

/// k distinct existing edges. Throws kNotEnoughCandidates.
std::vector<std::pair<NodeId, NodeId>> SampleRemoveBatch(const DynamicGraph& g,
                                                         std::size_t k,
                                                         std::uint64_t seed);

/// Roughly half inserts and half removes in random order. Removes target
/// edges of the input graph, inserts target its non-edges, so each op is valid
/// at its position.
std::vector<EdgeOp> SampleMixedBatch(const DynamicGraph& g, std::size_t k,
                                     const WeightRange& weights,
                                     std::uint64_t seed);

struct BSpec {
  enum class Mode { kConstant, kUniform };
  Mode mode = Mode::kConstant;
  std::uint32_t lo = 1;  // the constant for kConstant
  std::uint32_t hi = 1;

  static BSpec Constant(std::uint32_t c) { return {Mode::kConstant, c, c}; }
  static BSpec Uniform(std::uint32_t lo, std::uint32_t hi) {
    return {Mode::kUniform, lo, hi};
  }
};

BFunction GenBFunction(NodeId n, const BSpec& spec, std::uint64_t seed);

}  // namespace bsuitor
