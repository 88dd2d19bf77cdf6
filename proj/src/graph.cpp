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

#include "bsuitor/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace bsuitor {

const char* ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kNonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::kMissingEdge: return "MissingEdge";
    case ErrorCode::kNodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMixedOwner: return "MixedOwner";
    case ErrorCode::kAlreadyPresent: return "AlreadyPresent";
    case ErrorCode::kWouldNotImprove: return "WouldNotImprove";
    case ErrorCode::kNotPresent: return "NotPresent";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotEnoughCandidates: return "NotEnoughCandidates";
    case ErrorCode::kBatchConflict: return "BatchConflict";
  }
  return "Unknown";
}

std::strong_ordering CompareProposals(const Proposal& a,
                                      const std::optional<Proposal>& b) {
  if (!b) return std::strong_ordering::greater;
  if (a.owner != b->owner) {
    throw Error(ErrorCode::kMixedOwner,
                "owners " + std::to_string(a.owner) + " and " +
                    std::to_string(b->owner));
  }
  if (a.partner == b->partner && a.w == b->w) {
    return std::strong_ordering::equal;
  }
  return Beats(a.partner, a.w, b->partner, b->w) ? std::strong_ordering::greater
                                                 : std::strong_ordering::less;
}

void DynamicGraph::CheckNode(NodeId u) const {
  if (u >= adjacency_.size()) {
    throw Error(ErrorCode::kNodeOutOfRange,
                "node " + std::to_string(u) + " not in [0, " +
                    std::to_string(adjacency_.size()) + ")");
  }
}

void DynamicGraph::AddEdge(NodeId u, NodeId v, Weight w) {
  CheckNode(u);
  CheckNode(v);
  if (u == v) {
    throw Error(ErrorCode::kSelfLoop, "node " + std::to_string(u));
  }
  // Also rejects NaN.
  if (!(w > 0.0)) {
    throw Error(ErrorCode::kNonPositiveWeight, FormatWeight(w));
  }
  const NodeId lo = std::min(u, v);
  const NodeId hi = std::max(u, v);
  auto [it, inserted] = index_.try_emplace(
      Key(lo, hi), Slot{w, static_cast<std::uint32_t>(adjacency_[lo].size()),
                        static_cast<std::uint32_t>(adjacency_[hi].size())});
  if (!inserted) {
    throw Error(ErrorCode::kDuplicateEdge,
                "{" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  adjacency_[lo].push_back({hi, w});
  adjacency_[hi].push_back({lo, w});
}

// Swap-pop the entry at `pos` of adjacency_[owner] and fix the index slot of
// the entry that moved into its place.
void DynamicGraph::EraseSlot(NodeId owner, std::uint32_t pos) {
  auto& adj = adjacency_[owner];
  const auto last = static_cast<std::uint32_t>(adj.size() - 1);
  if (pos != last) {
    adj[pos] = adj[last];
    Slot& moved = index_.at(Key(owner, adj[pos].node));
    if (owner < adj[pos].node) {
      moved.pos_lo = pos;
    } else {
      moved.pos_hi = pos;
    }
  }
  adj.pop_back();
}

Weight DynamicGraph::RemoveEdge(NodeId u, NodeId v) {
  CheckNode(u);
  CheckNode(v);
  auto it = index_.find(Key(u, v));
  if (u == v || it == index_.end()) {
    throw Error(ErrorCode::kMissingEdge,
                "{" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  const Slot slot = it->second;
  index_.erase(it);
  EraseSlot(std::min(u, v), slot.pos_lo);
  EraseSlot(std::max(u, v), slot.pos_hi);
  return slot.w;
}

bool DynamicGraph::HasEdge(NodeId u, NodeId v) const {
  CheckNode(u);
  CheckNode(v);
  return u != v && index_.contains(Key(u, v));
}

Weight DynamicGraph::WeightOf(NodeId u, NodeId v) const {
  CheckNode(u);
  CheckNode(v);
  auto it = index_.find(Key(u, v));
  if (u == v || it == index_.end()) {
    throw Error(ErrorCode::kMissingEdge,
                "{" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  return it->second.w;
}

std::size_t DynamicGraph::MaxDegree() const {
  std::size_t best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, adj.size());
  return best;
}

std::vector<Edge> DynamicGraph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (const Neighbor& nb : adjacency_[u]) {
      if (u < nb.node) out.push_back({u, nb.node, nb.w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool DynamicGraph::CheckConsistency() const {
  std::size_t entries = 0;
  for (NodeId u = 0; u < num_nodes(); ++u) {
    const auto& adj = adjacency_[u];
    entries += adj.size();
    for (std::uint32_t pos = 0; pos < adj.size(); ++pos) {
      const NodeId x = adj[pos].node;
      if (x == u || x >= num_nodes()) return false;
      auto it = index_.find(Key(u, x));
      if (it == index_.end() || it->second.w != adj[pos].w) return false;
      const std::uint32_t own = u < x ? it->second.pos_lo : it->second.pos_hi;
      const std::uint32_t other = u < x ? it->second.pos_hi : it->second.pos_lo;
      if (own != pos) return false;
      const auto& back = adjacency_[x];
      if (other >= back.size() || back[other].node != u ||
          back[other].w != adj[pos].w) {
        return false;
      }
    }
  }
  return entries == 2 * index_.size();
}

// ---------------------------------------------------------------------------

std::string FormatWeight(Weight w) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, end);
}

namespace {

bool IsBlank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

template <typename T>
bool ParseNumber(std::string_view token, T& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

DynamicGraph ReadEdgeList(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<std::size_t> line_of;
  std::optional<NodeId> declared_nodes;
  NodeId max_id = 0;
  bool any = false;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (IsBlank(line)) continue;
    const auto tokens = Tokenize(line);
    if (tokens[0].front() == '#' || tokens[0].front() == '%') {
      // "# nodes N [...]"
      if (tokens.size() >= 3 && tokens[0] == "#" && tokens[1] == "nodes") {
        NodeId n = 0;
        if (!ParseNumber(tokens[2], n)) {
          throw ParseError(ErrorCode::kParseError, lineno,
                           "bad node count in header");
        }
        declared_nodes = n;
      }
      continue;
    }
    if (tokens.size() != 3) {
      throw ParseError(ErrorCode::kParseError, lineno,
                       "expected 'u v w', got " +
                           std::to_string(tokens.size()) + " fields");
    }
    Edge e;
    if (!ParseNumber(tokens[0], e.u) || !ParseNumber(tokens[1], e.v)) {
      throw ParseError(ErrorCode::kParseError, lineno, "bad node id");
    }
    if (!ParseNumber(tokens[2], e.w)) {
      throw ParseError(ErrorCode::kParseError, lineno, "bad weight");
    }
    max_id = std::max({max_id, e.u, e.v});
    any = true;
    edges.push_back(e);
    line_of.push_back(lineno);
  }

  NodeId n = any ? max_id + 1 : 0;
  if (declared_nodes) {
    if (any && *declared_nodes <= max_id) {
      throw ParseError(ErrorCode::kParseError, line_of.back(),
                       "node id exceeds declared node count");
    }
    n = *declared_nodes;
  }
  DynamicGraph g(n);
  g.Reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    try {
      g.AddEdge(edges[i].u, edges[i].v, edges[i].w);
    } catch (const Error& err) {
      throw ParseError(err.code(), line_of[i], err.what());
    }
  }
  return g;
}

void WriteEdgeList(std::ostream& out, const DynamicGraph& g) {
  out << "# nodes " << g.num_nodes() << " edges " << g.num_edges() << '\n';
  for (const Edge& e : g.Edges()) {
    out << e.u << ' ' << e.v << ' ' << FormatWeight(e.w) << '\n';
  }
}

}  // namespace bsuitor
