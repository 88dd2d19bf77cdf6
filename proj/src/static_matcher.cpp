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

#include "bsuitor/static_matcher.hpp"

#include <deque>
#include <string>
#include <vector>

namespace bsuitor {

std::optional<Neighbor> FindPartner(const DynamicGraph& g,
                                    const MatchingState& state, NodeId u) {
  const SuitorQueue& own = state.queue(u);
  std::optional<Neighbor> best;
  for (const Neighbor& nb : g.Neighbors(u)) {
    if (best && !Beats(nb.node, nb.w, best->node, best->w)) continue;
    if (own.Contains(nb.node)) continue;
    if (!Beats(u, nb.w, state.queue(nb.node).Min())) continue;
    best = nb;
  }
  return best;
}

MatchingState RunStatic(const DynamicGraph& g, const BFunction& b,
                        std::span<const NodeId> order) {
  const NodeId n = g.num_nodes();
  if (b.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "b has " + std::to_string(b.size()) + " entries for " +
                    std::to_string(n) + " nodes");
  }
  if (!order.empty()) {
    std::vector<bool> seen(n, false);
    for (NodeId u : order) {
      if (u >= n || seen[u]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "processing order is not a permutation");
      }
      seen[u] = true;
    }
    if (order.size() != n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "processing order is not a permutation");
    }
  }

  MatchingState state(b);
  std::deque<NodeId> work;
  auto enqueue_copies = [&](NodeId u) {
    for (std::uint32_t i = 0; i < b[u]; ++i) work.push_back(u);
  };
  if (order.empty()) {
    for (NodeId u = 0; u < n; ++u) enqueue_copies(u);
  } else {
    for (NodeId u : order) enqueue_copies(u);
  }

  while (!work.empty()) {
    const NodeId u = work.front();
    work.pop_front();
    const auto partner = FindPartner(g, state, u);
    // The partner must also beat u's own weakest suitor; a saturated u swaps
    // that suitor out.
    if (!partner ||
        !Beats(partner->node, partner->w, state.queue(u).Min())) {
      continue;
    }
    if (const auto evicted = state.QueueInsert(u, partner->node, partner->w)) {
      state.QueueRemove(*evicted, u);
      work.push_back(*evicted);
    }
    if (const auto evicted = state.QueueInsert(partner->node, u, partner->w)) {
      state.QueueRemove(*evicted, partner->node);
      work.push_back(*evicted);
    }
  }
  return state;
}

}  // namespace bsuitor
