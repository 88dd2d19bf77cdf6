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

#include "bsuitor/dynamic_matcher.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "bsuitor/static_matcher.hpp"

namespace bsuitor {

void UpdateStats::Merge(const UpdateStats& other) {
  affected_nodes += other.affected_nodes;
  path_lengths.insert(path_lengths.end(), other.path_lengths.begin(),
                      other.path_lengths.end());
  loose_ends += other.loose_ends;
  queue_ops += other.queue_ops;
  max_loose_end_depth = std::max(max_loose_end_depth, other.max_loose_end_depth);
  wall_time_ns += other.wall_time_ns;
}

namespace {

// Shared bookkeeping for one public call (single update or whole batch).
class Updater {
 public:
  Updater(const DynamicGraph& g, MatchingState& state, PathRecorder* recorder)
      : g_(g), state_(state), recorder_(recorder) {}

  std::optional<NodeId> Insert(NodeId owner, NodeId partner, Weight w) {
    Touch(owner);
    return state_.QueueInsert(owner, partner, w);
  }

  void Remove(NodeId owner, NodeId partner) {
    Touch(owner);
    state_.QueueRemove(owner, partner);
  }

  // FindAffected: one update path from `start`, then one more traversal per
  // loose end, nested loose ends included.
  void Traverse(NodeId start) {
    std::vector<std::pair<NodeId, std::uint32_t>> pending{{start, 0}};
    while (!pending.empty()) {
      const auto [x, depth] = pending.back();
      pending.pop_back();
      stats_.max_loose_end_depth = std::max(stats_.max_loose_end_depth, depth);
      for (NodeId loose : WalkPath(x, depth)) {
        ++stats_.loose_ends;
        pending.emplace_back(loose, depth + 1);
      }
    }
  }

  UpdateStats Finish() {
    std::sort(touched_.begin(), touched_.end());
    stats_.affected_nodes = static_cast<std::uint64_t>(
        std::unique(touched_.begin(), touched_.end()) - touched_.begin());
    return std::move(stats_);
  }

  const DynamicGraph& graph() const { return g_; }
  MatchingState& state() { return state_; }

 private:
  void Touch(NodeId u) {
    ++stats_.queue_ops;
    touched_.push_back(u);
  }

  // Returns the loose ends found on this path (at most one in practice).
  std::vector<NodeId> WalkPath(NodeId x, std::uint32_t depth) {
    std::vector<NodeId> loose_ends;
    std::size_t path_index = 0;
    if (recorder_) {
      path_index = recorder_->paths.size();
      auto& path = recorder_->paths.emplace_back();
      path.nodes.push_back(x);
      path.loose_end_depth = depth;
    }
    std::uint32_t length = 0;
    NodeId cu = x;
    while (true) {
      const auto ca = FindPartner(g_, state_, cu);
      // cu is locally affected only if the candidate also beats its own
      // weakest suitor; otherwise the path ends here.
      if (!ca || !Beats(ca->node, ca->w, state_.queue(cu).Min())) break;

      const auto prev_cu = Insert(cu, ca->node, ca->w);
      const auto prev_ca = Insert(ca->node, cu, ca->w);
      ++length;
      if (recorder_) {
        Record(path_index, ca->node, ca->w, UpdatePath::Step::kInsert, true);
      }
      if (prev_cu) {
        Remove(*prev_cu, cu);
        loose_ends.push_back(*prev_cu);
      }
      if (!prev_ca) break;

      if (recorder_) {
        const bool was_mutual = state_.queue(*prev_ca).Contains(ca->node);
        Record(path_index, *prev_ca, g_.WeightOf(ca->node, *prev_ca),
               UpdatePath::Step::kRemove, was_mutual);
      }
      Remove(*prev_ca, ca->node);
      ++length;
      cu = *prev_ca;
    }
    stats_.path_lengths.push_back(length);
    return loose_ends;
  }

  void Record(std::size_t path_index, NodeId next, Weight w,
              UpdatePath::Step step, bool matched_ok) {
    auto& path = recorder_->paths[path_index];
    path.nodes.push_back(next);
    path.weights.push_back(w);
    path.steps.push_back(step);
    path.matched_ok.push_back(matched_ok);
  }

  const DynamicGraph& g_;
  MatchingState& state_;
  PathRecorder* recorder_;
  UpdateStats stats_;
  std::vector<NodeId> touched_;
};

void InsertMatching(Updater& up, NodeId u, NodeId v, Weight w) {
  MatchingState& state = up.state();
  if (!Beats(v, w, state.queue(u).Min()) || !Beats(u, w, state.queue(v).Min())) {
    return;
  }
  const auto start_u = up.Insert(u, v, w);
  const auto start_v = up.Insert(v, u, w);
  // Both evicted nodes are released before either path is walked.
  if (start_u) up.Remove(*start_u, u);
  if (start_v) up.Remove(*start_v, v);
  if (start_u) up.Traverse(*start_u);
  if (start_v) up.Traverse(*start_v);
}

void RemoveMatching(Updater& up, NodeId u, NodeId v, bool was_matched) {
  if (!was_matched) return;
  up.Remove(u, v);
  up.Remove(v, u);
  up.Traverse(u);
  up.Traverse(v);
}

bool IsMatched(const MatchingState& state, NodeId u, NodeId v) {
  return state.queue(u).Contains(v) && state.queue(v).Contains(u);
}

void ApplyOne(DynamicGraph& g, Updater& up, const EdgeOp& op) {
  if (op.kind == EdgeOp::Kind::kInsert) {
    g.AddEdge(op.u, op.v, op.w);
    InsertMatching(up, op.u, op.v, op.w);
  } else {
    if (!g.HasEdge(op.u, op.v)) {
      throw Error(ErrorCode::kMissingEdge, "{" + std::to_string(op.u) + "," +
                                               std::to_string(op.v) + "}");
    }
    const bool matched = IsMatched(up.state(), op.u, op.v);
    g.RemoveEdge(op.u, op.v);
    RemoveMatching(up, op.u, op.v, matched);
  }
}

template <typename Pairs>
void RejectDuplicatePairs(const Pairs& pairs) {
  std::vector<std::uint64_t> keys;
  keys.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    const NodeId lo = std::min(u, v);
    const NodeId hi = std::max(u, v);
    keys.push_back((static_cast<std::uint64_t>(lo) << 32) | hi);
  }
  std::sort(keys.begin(), keys.end());
  const auto dup = std::adjacent_find(keys.begin(), keys.end());
  if (dup != keys.end()) {
    throw Error(ErrorCode::kBatchConflict,
                "pair {" + std::to_string(*dup >> 32) + "," +
                    std::to_string(*dup & 0xffffffffu) +
                    "} appears more than once");
  }
}

}  // namespace

UpdateStats FindAffected(const DynamicGraph& g, MatchingState& state,
                         NodeId start, PathRecorder* recorder) {
  Updater up(g, state, recorder);
  up.Traverse(start);
  return up.Finish();
}

UpdateStats ApplyInsert(DynamicGraph& g, MatchingState& state, NodeId u,
                        NodeId v, Weight w, PathRecorder* recorder) {
  Updater up(g, state, recorder);
  ApplyOne(g, up, EdgeOp::Insert(u, v, w));
  return up.Finish();
}

UpdateStats ApplyRemove(DynamicGraph& g, MatchingState& state, NodeId u,
                        NodeId v, PathRecorder* recorder) {
  Updater up(g, state, recorder);
  ApplyOne(g, up, EdgeOp::Remove(u, v));
  return up.Finish();
}

UpdateStats ApplyBatchInsert(DynamicGraph& g, MatchingState& state,
                             std::span<const Edge> batch,
                             PathRecorder* recorder) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(batch.size());
  for (const Edge& e : batch) pairs.emplace_back(e.u, e.v);
  RejectDuplicatePairs(pairs);

  Updater up(g, state, recorder);
  for (const Edge& e : batch) ApplyOne(g, up, EdgeOp::Insert(e.u, e.v, e.w));
  return up.Finish();
}

UpdateStats ApplyBatchRemove(DynamicGraph& g, MatchingState& state,
                             std::span<const std::pair<NodeId, NodeId>> batch,
                             PathRecorder* recorder) {
  RejectDuplicatePairs(batch);
  Updater up(g, state, recorder);
  for (const auto& [u, v] : batch) ApplyOne(g, up, EdgeOp::Remove(u, v));
  return up.Finish();
}

UpdateStats ApplyBatchMixed(DynamicGraph& g, MatchingState& state,
                            std::span<const EdgeOp> ops,
                            PathRecorder* recorder) {
  Updater up(g, state, recorder);
  for (const EdgeOp& op : ops) ApplyOne(g, up, op);
  return up.Finish();
}

}  // namespace bsuitor
