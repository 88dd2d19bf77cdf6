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

#include <optional>
#include <span>

#include "bsuitor/graph.hpp"
#include "bsuitor/suitor_state.hpp"

namespace bsuitor {

/// The best neighbor v of u (under u's proposal order) with v not in S(u) and
/// whose proposal (v, u) beats (v, S(v).min). nullopt if nobody qualifies.
/// Saturation of u itself is not consulted.
std::optional<Neighbor> FindPartner(const DynamicGraph& g,
                                    const MatchingState& state, NodeId u);

/// Sequential b-Suitor. Every node starts with b(u) copies in a FIFO work
/// queue; a popped unsaturated node claims its best qualifying partner, and a
/// partner that overflows evicts its weakest suitor, which is re-queued.
///
/// `order` is the initial processing order (a permutation of the nodes);
/// empty means ascending ids. The result does not depend on it.
MatchingState RunStatic(const DynamicGraph& g, const BFunction& b,
                        std::span<const NodeId> order = {});

}  // namespace bsuitor
