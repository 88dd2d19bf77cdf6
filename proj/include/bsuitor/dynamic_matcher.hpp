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
#include <optional>
#include <span>
#include <vector>

#include "bsuitor/graph.hpp"
#include "bsuitor/suitor_state.hpp"

namespace bsuitor {

struct UpdateStats {
  /// Distinct nodes whose suitor queue changed.
  std::uint64_t affected_nodes = 0;
  /// Edges per update path, in traversal order. Empty paths are included.
  std::vector<std::uint32_t> path_lengths;
  /// Recursive FindAffected runs started from a loose end.
  std::uint64_t loose_ends = 0;
  /// Queue insert and remove operations.
  std::uint64_t queue_ops = 0;
  /// Deepest chain of loose-end recursion seen (0 = none).
  std::uint32_t max_loose_end_depth = 0;
  /// Filled in by callers that time the update.
  std::uint64_t wall_time_ns = 0;

  void Merge(const UpdateStats& other);
};

/// One traversed update path. `nodes[0]` is the start; edge j joins
/// nodes[j] and nodes[j+1].
struct UpdatePath {
  enum class Step : std::uint8_t { kInsert, kRemove };

  std::vector<NodeId> nodes;
  std::vector<Weight> weights;
  std::vector<Step> steps;
  /// For kInsert: the pair is mutual right after the step. For kRemove: the
  /// pair was mutual right before the step.
  std::vector<bool> matched_ok;
  /// 0 for a path started by an update, k for the k-th nested loose end.
  std::uint32_t loose_end_depth = 0;

  std::size_t length() const noexcept { return steps.size(); }
};

/// Optional sink for full path records. Counters in UpdateStats are always
/// maintained; paths are only recorded when a recorder is supplied.
struct PathRecorder {
  std::vector<UpdatePath> paths;
};

struct EdgeOp {
  enum class Kind : std::uint8_t { kInsert, kRemove };
  Kind kind = Kind::kInsert;
  NodeId u = 0;
  NodeId v = 0;
  Weight w = 0.0;  // ignored for kRemove

  static EdgeOp Insert(NodeId u, NodeId v, Weight w) {
    return {Kind::kInsert, u, v, w};
  }
  static EdgeOp Remove(NodeId u, NodeId v) { return {Kind::kRemove, u, v, 0.0}; }

  friend bool operator==(const EdgeOp&, const EdgeOp&) = default;
};

/// Walks update paths from `start` and repairs every locally affected node on
/// them. `state` may be mid-update: the caller has already applied the queue
/// edits that made `start` affected. A saturated node evicted along the way
/// (a loose end) gets its own traversal afterwards.
UpdateStats FindAffected(const DynamicGraph& g, MatchingState& state,
                         NodeId start, PathRecorder* recorder = nullptr);

/// Adds {u, v} to the graph, then updates the matching. The matching only
/// changes if (u, v, w) beats the weakest suitor at both endpoints.
UpdateStats ApplyInsert(DynamicGraph& g, MatchingState& state, NodeId u,
                        NodeId v, Weight w, PathRecorder* recorder = nullptr);

/// Removes {u, v} from the graph, then updates the matching. Only a matched
/// edge changes anything.
UpdateStats ApplyRemove(DynamicGraph& g, MatchingState& state, NodeId u,
                        NodeId v, PathRecorder* recorder = nullptr);

// Batch variants apply the single-edge routine per element, in order.
// Duplicate pairs inside a batch are rejected with kBatchConflict before
// anything is applied. On a graph-layer error the already-applied prefix
// stays applied; the state is valid for the partially updated graph.

UpdateStats ApplyBatchInsert(DynamicGraph& g, MatchingState& state,
                             std::span<const Edge> batch,
                             PathRecorder* recorder = nullptr);

UpdateStats ApplyBatchRemove(DynamicGraph& g, MatchingState& state,
                             std::span<const std::pair<NodeId, NodeId>> batch,
                             PathRecorder* recorder = nullptr);

/// Sequential composition of single inserts and removes. No duplicate check:
/// the same pair may legitimately be inserted and later removed.
UpdateStats ApplyBatchMixed(DynamicGraph& g, MatchingState& state,
                            std::span<const EdgeOp> ops,
                            PathRecorder* recorder = nullptr);

}  // namespace bsuitor
