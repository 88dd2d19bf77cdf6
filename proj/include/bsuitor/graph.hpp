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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "bsuitor/error.hpp"

namespace bsuitor {

using NodeId = std::uint32_t;
using Weight = double;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Weight w = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Canonical form of an undirected edge: endpoints ordered as u < v.
inline Edge Canonical(Edge e) {
  if (e.u > e.v) std::swap(e.u, e.v);
  return e;
}

struct Neighbor {
  NodeId node = 0;
  Weight w = 0.0;
};

// ---------------------------------------------------------------------------
// Proposal order
// ---------------------------------------------------------------------------

/// A suitor proposal sitting in the queue of `owner`.
struct Proposal {
  NodeId owner = 0;
  NodeId partner = 0;
  Weight w = 0.0;

  friend bool operator==(const Proposal&, const Proposal&) = default;
};

/// Strict total order at a fixed owner: heavier wins, equal weights fall back
/// to the smaller partner id. Comparisons are exact; no epsilon.
constexpr bool Beats(NodeId partner_a, Weight w_a, NodeId partner_b,
                     Weight w_b) noexcept {
  return w_a > w_b || (w_a == w_b && partner_a < partner_b);
}

/// Same as above with an absent right-hand side, which every proposal beats.
constexpr bool Beats(NodeId partner_a, Weight w_a,
                     const std::optional<Neighbor>& b) noexcept {
  return !b || Beats(partner_a, w_a, b->node, b->w);
}

/// Three-way comparison of two proposals with the same owner. `greater` means
/// `a` beats `b`. Throws kMixedOwner if the owners differ.
std::strong_ordering CompareProposals(const Proposal& a,
                                      const std::optional<Proposal>& b);

// ---------------------------------------------------------------------------
// DynamicGraph
// ---------------------------------------------------------------------------

/// Undirected weighted simple graph over a fixed node set [0, n).
///
/// Adjacency is kept as one unordered vector per node for fast scans, plus a
/// hash index from the canonical pair to the weight and the two adjacency
/// slots, so membership tests, lookups and removals are O(1).
class DynamicGraph {
 public:
  DynamicGraph() = default;
  explicit DynamicGraph(NodeId n) : adjacency_(n) {}

  NodeId num_nodes() const noexcept {
    return static_cast<NodeId>(adjacency_.size());
  }
  std::size_t num_edges() const noexcept { return index_.size(); }

  void AddEdge(NodeId u, NodeId v, Weight w);
  /// Returns the weight of the removed edge.
  Weight RemoveEdge(NodeId u, NodeId v);

  bool HasEdge(NodeId u, NodeId v) const;
  Weight WeightOf(NodeId u, NodeId v) const;
  std::span<const Neighbor> Neighbors(NodeId u) const {
    CheckNode(u);
    return adjacency_[u];
  }
  std::size_t Degree(NodeId u) const { return Neighbors(u).size(); }
  std::size_t MaxDegree() const;

  /// All edges in canonical form, sorted by (u, v).
  std::vector<Edge> Edges() const;

  void Reserve(std::size_t edges) { index_.reserve(edges); }

  /// Symmetry and index consistency; diagnostic, O(n + m).
  bool CheckConsistency() const;

 private:
  struct Slot {
    Weight w;
    std::uint32_t pos_lo;  // position in adjacency_[min(u, v)]
    std::uint32_t pos_hi;  // position in adjacency_[max(u, v)]
  };

  static std::uint64_t Key(NodeId u, NodeId v) noexcept {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
  void CheckNode(NodeId u) const;
  void EraseSlot(NodeId owner, std::uint32_t pos);

  std::vector<std::vector<Neighbor>> adjacency_;
  absl::flat_hash_map<std::uint64_t, Slot> index_;
};

// ---------------------------------------------------------------------------
// Edge-list text format
// ---------------------------------------------------------------------------

/// Reads "u v w" lines. Lines starting with '#' or '%' are comments, except a
/// "# nodes N" header, which fixes the node count (otherwise 1 + max id).
DynamicGraph ReadEdgeList(std::istream& in);

/// Writes a "# nodes N edges M" header followed by canonical sorted edges,
/// weights printed with round-trip precision.
void WriteEdgeList(std::ostream& out, const DynamicGraph& g);

std::string FormatWeight(Weight w);

}  // namespace bsuitor
