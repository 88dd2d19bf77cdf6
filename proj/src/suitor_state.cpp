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

#include "bsuitor/suitor_state.hpp"

#include <algorithm>
#include <sstream>

namespace bsuitor {

BFunction::BFunction(std::vector<std::uint32_t> goals)
    : goals_(std::move(goals)) {
  for (std::size_t u = 0; u < goals_.size(); ++u) {
    if (goals_[u] < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "b(" + std::to_string(u) + ") must be >= 1");
    }
  }
}

BFunction BFunction::Constant(NodeId n, std::uint32_t c) {
  return BFunction(std::vector<std::uint32_t>(n, c));
}

std::uint32_t BFunction::Max() const {
  return goals_.empty() ? 0 : *std::max_element(goals_.begin(), goals_.end());
}

// ---------------------------------------------------------------------------

bool SuitorQueue::Contains(NodeId partner) const noexcept {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const Neighbor& e) { return e.node == partner; });
}

std::optional<NodeId> SuitorQueue::Insert(NodeId partner, Weight w) {
  if (Contains(partner)) {
    throw Error(ErrorCode::kAlreadyPresent,
                std::to_string(partner) + " already in S(" +
                    std::to_string(owner_) + ")");
  }
  std::optional<NodeId> evicted;
  if (saturated()) {
    const Neighbor& weakest = entries_.back();
    if (!Beats(partner, w, weakest.node, weakest.w)) {
      throw Error(ErrorCode::kWouldNotImprove,
                  "(" + std::to_string(owner_) + "," + std::to_string(partner) +
                      ") does not beat min " + std::to_string(weakest.node));
    }
    evicted = weakest.node;
    entries_.pop_back();
  }
  auto pos = std::find_if(entries_.begin(), entries_.end(),
                          [&](const Neighbor& e) {
                            return Beats(partner, w, e.node, e.w);
                          });
  entries_.insert(pos, Neighbor{partner, w});
  return evicted;
}

void SuitorQueue::Remove(NodeId partner) {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const Neighbor& e) { return e.node == partner; });
  if (it == entries_.end()) {
    throw Error(ErrorCode::kNotPresent,
                std::to_string(partner) + " not in S(" +
                    std::to_string(owner_) + ")");
  }
  entries_.erase(it);
}

bool operator==(const SuitorQueue& a, const SuitorQueue& b) {
  if (a.owner_ != b.owner_ || a.capacity_ != b.capacity_ ||
      a.entries_.size() != b.entries_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].node != b.entries_[i].node ||
        a.entries_[i].w != b.entries_[i].w) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

MatchingState::MatchingState(const BFunction& b) : b_(b) {
  queues_.reserve(b.size());
  for (NodeId u = 0; u < b.size(); ++u) queues_.emplace_back(u, b[u]);
}

SuitorQueue& MatchingState::mutable_queue(NodeId u) {
  if (u >= queues_.size()) {
    throw Error(ErrorCode::kNodeOutOfRange, "node " + std::to_string(u));
  }
  return queues_[u];
}

std::optional<NodeId> MatchingState::QueueInsert(NodeId owner, NodeId partner,
                                                 Weight w) {
  return mutable_queue(owner).Insert(partner, w);
}

std::optional<NodeId> MatchingState::QueueInsert(const DynamicGraph& g,
                                                 NodeId owner, NodeId partner) {
  return QueueInsert(owner, partner, g.WeightOf(owner, partner));
}

void MatchingState::QueueRemove(NodeId owner, NodeId partner) {
  mutable_queue(owner).Remove(partner);
}

std::optional<Proposal> MatchingState::QueueMin(NodeId owner) const {
  const auto m = queue(owner).Min();
  if (!m) return std::nullopt;
  return Proposal{owner, m->node, m->w};
}

std::vector<Edge> MatchingState::MatchingEdges() const {
  std::vector<Edge> out;
  for (const SuitorQueue& q : queues_) {
    for (const Neighbor& e : q.entries()) {
      if (q.owner() < e.node && queues_[e.node].Contains(q.owner())) {
        out.push_back({q.owner(), e.node, e.w});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Weight MatchingState::MatchingWeight() const {
  Weight total = 0.0;
  for (const Edge& e : MatchingEdges()) total += e.w;
  return total;
}

bool MatchingState::CheckSInvariant(const DynamicGraph& g) const {
  if (g.num_nodes() != num_nodes()) return false;
  for (const SuitorQueue& q : queues_) {
    if (q.size() > q.capacity()) return false;
    for (const Neighbor& e : q.entries()) {
      if (e.node >= num_nodes() || !queues_[e.node].Contains(q.owner())) {
        return false;
      }
      if (!g.HasEdge(q.owner(), e.node) ||
          g.WeightOf(q.owner(), e.node) != e.w) {
        return false;
      }
    }
  }
  return true;
}

std::string MatchingState::Dump() const {
  std::ostringstream out;
  for (const SuitorQueue& q : queues_) {
    out << q.owner() << ": [";
    bool first = true;
    for (const Neighbor& e : q.entries()) {
      if (!first) out << ", ";
      first = false;
      out << e.node << ':' << FormatWeight(e.w);
    }
    out << "]\n";
  }
  return out.str();
}

bool operator==(const MatchingState& a, const MatchingState& b) {
  return a.b_ == b.b_ && a.queues_ == b.queues_;
}

}  // namespace bsuitor
