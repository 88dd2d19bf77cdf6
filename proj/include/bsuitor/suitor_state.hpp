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
#include <string>
#include <vector>

#include "bsuitor/graph.hpp"

namespace bsuitor {

/// Per-node saturation goals b(u) >= 1, fixed for the lifetime of a state.
class BFunction {
 public:
  BFunction() = default;
  explicit BFunction(std::vector<std::uint32_t> goals);
  static BFunction Constant(NodeId n, std::uint32_t c);

  std::uint32_t operator[](NodeId u) const { return goals_[u]; }
  NodeId size() const noexcept { return static_cast<NodeId>(goals_.size()); }
  std::uint32_t Max() const;
  const std::vector<std::uint32_t>& values() const noexcept { return goals_; }

  friend bool operator==(const BFunction&, const BFunction&) = default;

 private:
  std::vector<std::uint32_t> goals_;
};

/// S(u): at most b(u) suitors of `owner`, kept sorted best-first under the
/// proposal order at `owner`. Small sorted array; b is tiny in practice.
class SuitorQueue {
 public:
  SuitorQueue(NodeId owner, std::uint32_t capacity)
      : owner_(owner), capacity_(capacity) {
    entries_.reserve(capacity);
  }

  NodeId owner() const noexcept { return owner_; }
  std::uint32_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool saturated() const noexcept { return entries_.size() == capacity_; }

  /// Weakest suitor, or nullopt while the queue is unsaturated.
  std::optional<Neighbor> Min() const {
    if (!saturated()) return std::nullopt;
    return entries_.back();
  }

  bool Contains(NodeId partner) const noexcept;
  /// Best first.
  std::span<const Neighbor> entries() const noexcept { return entries_; }

  /// Adds `partner`; returns the evicted weakest suitor if the queue was
  /// saturated. A saturated queue only accepts a proposal that beats Min().
  std::optional<NodeId> Insert(NodeId partner, Weight w);
  void Remove(NodeId partner);

  friend bool operator==(const SuitorQueue& a, const SuitorQueue& b);

 private:
  NodeId owner_;
  std::uint32_t capacity_;
  std::vector<Neighbor> entries_;
};

/// All suitor queues. At rest the S-invariant v in S(u) <=> u in S(v) holds
/// and the mutual pairs form the b-matching.
class MatchingState {
 public:
  MatchingState() = default;
  explicit MatchingState(const BFunction& b);

  NodeId num_nodes() const noexcept {
    return static_cast<NodeId>(queues_.size());
  }
  const BFunction& b() const noexcept { return b_; }
  const SuitorQueue& queue(NodeId u) const { return queues_.at(u); }

  std::optional<NodeId> QueueInsert(NodeId owner, NodeId partner, Weight w);
  /// Looks the weight up in `g`; the pair must be a graph edge.
  std::optional<NodeId> QueueInsert(const DynamicGraph& g, NodeId owner,
                                    NodeId partner);
  void QueueRemove(NodeId owner, NodeId partner);
  std::optional<Proposal> QueueMin(NodeId owner) const;
  bool IsSaturated(NodeId owner) const { return queue(owner).saturated(); }

  /// Mutually held pairs in canonical sorted order.
  std::vector<Edge> MatchingEdges() const;
  Weight MatchingWeight() const;

  /// Mutual membership for every entry, and every entry is a live graph edge
  /// with the recorded weight.
  bool CheckSInvariant(const DynamicGraph& g) const;

  /// One line per node: "u: [p1:w1, p2:w2]" best first.
  std::string Dump() const;

  friend bool operator==(const MatchingState& a, const MatchingState& b);

 private:
  SuitorQueue& mutable_queue(NodeId u);

  BFunction b_;
  std::vector<SuitorQueue> queues_;
};

}  // namespace bsuitor
