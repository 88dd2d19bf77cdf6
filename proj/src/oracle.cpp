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

#include "bsuitor/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bsuitor/static_matcher.hpp"

namespace bsuitor {

namespace {

class ExactSearch {
 public:
  ExactSearch(std::vector<Edge> edges, const BFunction& b)
      : edges_(std::move(edges)), remaining_(b.values()),
        suffix_(edges_.size() + 1, 0.0) {
    // Heaviest first tightens the bound early.
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& c) { return a.w > c.w; });
    for (std::size_t i = edges_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1] + edges_[i].w;
    }
    chosen_.reserve(edges_.size());
  }

  ExactResult Run() {
    Visit(0, 0.0);
    std::sort(best_.witness.begin(), best_.witness.end());
    // Re-sum in canonical order so equal edge sets give bit-equal weights,
    // whatever order the search added them in.
    best_.weight = 0.0;
    for (const Edge& e : best_.witness) best_.weight += e.w;
    return best_;
  }

 private:
  void Visit(std::size_t i, Weight current) {
    if (current > best_.weight) {
      best_.weight = current;
      best_.witness.clear();
      for (std::size_t k : chosen_) best_.witness.push_back(edges_[k]);
    }
    if (i == edges_.size() || current + suffix_[i] <= best_.weight) return;
    const Edge& e = edges_[i];
    if (remaining_[e.u] > 0 && remaining_[e.v] > 0) {
      --remaining_[e.u];
      --remaining_[e.v];
      chosen_.push_back(i);
      Visit(i + 1, current + e.w);
      chosen_.pop_back();
      ++remaining_[e.u];
      ++remaining_[e.v];
    }
    Visit(i + 1, current);
  }

  std::vector<Edge> edges_;
  std::vector<std::uint32_t> remaining_;
  std::vector<Weight> suffix_;
  std::vector<std::size_t> chosen_;
  ExactResult best_;
};

}  // namespace

ExactResult ExactMwbm(const DynamicGraph& g, const BFunction& b) {
  if (g.num_edges() > kExactMaxEdges) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(g.num_edges()) + " edges exceed the budget of " +
                    std::to_string(kExactMaxEdges));
  }
  if (b.size() != g.num_nodes()) {
    throw Error(ErrorCode::kInvalidArgument, "b does not match node count");
  }
  return ExactSearch(g.Edges(), b).Run();
}

bool CheckHalfApprox(const DynamicGraph& g, const BFunction& b) {
  const ExactResult exact = ExactMwbm(g, b);
  const Weight approx = RunStatic(g, b).MatchingWeight();
  return 2.0 * approx >= exact.weight;
}

bool CheckStaticEquivalence(const DynamicGraph& g_final, const BFunction& b,
                            const MatchingState& state) {
  if (state.num_nodes() != g_final.num_nodes() || !(state.b() == b)) {
    return false;
  }
  const MatchingState reference = RunStatic(g_final, b);
  return reference == state &&
         reference.MatchingEdges() == state.MatchingEdges();
}

}  // namespace bsuitor
