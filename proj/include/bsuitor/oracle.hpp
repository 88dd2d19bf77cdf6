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

#include <cstddef>
#include <vector>

#include "bsuitor/graph.hpp"
#include "bsuitor/suitor_state.hpp"

namespace bsuitor {

/// Enumeration budget for ExactMwbm.
inline constexpr std::size_t kExactMaxEdges = 24;

struct ExactResult {
  Weight weight = 0.0;
  std::vector<Edge> witness;  // canonical, sorted
};

/// Maximum weight b-matching by exhaustive include/exclude search with
/// degree caps and a remaining-weight bound. Throws kTooLarge above
/// kExactMaxEdges edges.
ExactResult ExactMwbm(const DynamicGraph& g, const BFunction& b);

/// weight(RunStatic(g, b)) >= 0.5 * weight(ExactMwbm(g, b)).
bool CheckHalfApprox(const DynamicGraph& g, const BFunction& b);

/// True iff every suitor queue of `state` equals the one RunStatic computes on
/// `g_final` (which implies equal matching edge sets).
bool CheckStaticEquivalence(const DynamicGraph& g_final, const BFunction& b,
                            const MatchingState& state);

}  // namespace bsuitor
