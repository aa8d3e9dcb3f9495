// Copyright 2026 The dskernel Authors
//
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

#ifndef DSKERNEL_REDUCTION_HPP_
#define DSKERNEL_REDUCTION_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dskernel/graph.hpp"

namespace dskernel {

enum class ReductionKind : std::uint8_t {
  // Plain dominating set; forced choices are encoded by gadget vertices.
  kGadget,
  // Black-and-white dominating set; forced vertices are recorded, deleted and
  // their neighbors whitened.
  kAnnotated,
};

struct Mode {
  ReductionKind kind = ReductionKind::kGadget;
  // White-vertex deletion rules; only valid together with kAnnotated.
  bool extra_rules = false;

  static Mode Gadget() { return {ReductionKind::kGadget, false}; }
  static Mode Annotated(bool extra_rules = false) {
    return {ReductionKind::kAnnotated, extra_rules};
  }

  bool annotated() const { return kind == ReductionKind::kAnnotated; }

  // Throws std::invalid_argument when extra_rules is set in gadget mode.
  void Validate() const;

  friend bool operator==(const Mode&, const Mode&) = default;
};

enum class RuleKind : std::uint8_t {
  kRule1,
  kRule2Case11,
  kRule2Case12,
  kRule2Case13,
  kRule2Case2,
  kWhite1,  // white vertex of degree <= 1
  kWhite2,  // white degree-2 vertex whose neighbors are close in G - u
  kWhite3,  // white degree-3 vertex with connected neighborhood
};
inline constexpr std::size_t kRuleKindCount = 8;

inline constexpr std::array<RuleKind, kRuleKindCount> kAllRuleKinds = {
    RuleKind::kRule1,       RuleKind::kRule2Case11, RuleKind::kRule2Case12,
    RuleKind::kRule2Case13, RuleKind::kRule2Case2,  RuleKind::kWhite1,
    RuleKind::kWhite2,      RuleKind::kWhite3};

// Short stable names: R1, R2_1_1, R2_1_2, R2_1_3, R2_2, W1, W2, W3.
std::string_view RuleName(RuleKind rule);

inline bool IsPairRule(RuleKind rule) {
  return rule >= RuleKind::kRule2Case11 && rule <= RuleKind::kRule2Case2;
}

// One rule application.
//
// `added_gadgets` is ordered by attachment: Rule 1 and Case 1.2 [v'],
// Case 1.3 [w'], Case 2 [v', w'], Case 1.1 [z, z'].
struct RuleEvent {
  RuleKind rule = RuleKind::kRule1;
  std::vector<VertexId> centers;
  std::vector<VertexId> removed;
  std::vector<VertexId> added_gadgets;
  std::vector<VertexId> forced;
  // Change of |V| + |E|; strictly negative for every applied rule.
  std::int64_t delta_potential = 0;
};

struct ReductionStats {
  std::size_t vertices_before = 0;
  std::size_t edges_before = 0;
  std::size_t original_vertices_before = 0;
  std::size_t vertices_after = 0;
  std::size_t edges_after = 0;
  std::size_t original_vertices_after = 0;
  std::array<std::size_t, kRuleKindCount> rule_counts{};
  double elapsed_ms = 0.0;

  std::size_t count(RuleKind rule) const {
    return rule_counts[static_cast<std::size_t>(rule)];
  }
};

struct ReductionResult {
  Graph graph;
  // Vertices (ids of the input graph) placed into the solution by annotated
  // rules. Always empty in gadget mode.
  std::vector<VertexId> forced;
  std::vector<RuleEvent> events;
  ReductionStats stats;
};

enum class PairScope : std::uint8_t {
  // Only pairs at distance <= 3 are tested; this is exact once Rule 1 is
  // exhausted, which the scheduler guarantees before every pair test.
  kWithinDistanceThree,
  kAllPairs,
};

struct ReduceOptions {
  PairScope pair_scope = PairScope::kWithinDistanceThree;
  // When set, vertex and pair visit orders are permuted with this seed.
  std::optional<std::uint64_t> shuffle_seed;
};

// Single rule attempts. Each either mutates `g` and returns the event, or
// leaves `g` untouched and returns nullopt. Dead ids throw GraphError.
std::optional<RuleEvent> TryRule1(Graph& g, VertexId v, const Mode& mode);
std::optional<RuleEvent> TryRule2(Graph& g, VertexId v, VertexId w,
                                  const Mode& mode);
// Black vertices are never deleted (nullopt, not an error).
std::optional<RuleEvent> TryWhiteRules(Graph& g, VertexId u);

// Applies the rules until none is applicable. Round structure: exhaust
// Rule 1; sweep pairs with Rule 2, re-exhausting Rule 1 after every success;
// with extra rules, sweep white vertices. Rounds repeat until one round
// changes nothing.
//
// Gadget mode requires an all-black graph (throws std::invalid_argument).
ReductionResult Reduce(Graph g, const Mode& mode,
                       const ReduceOptions& options = {});

// True iff no rule of `mode` applies anywhere. Does not mutate.
bool IsReduced(const Graph& g, const Mode& mode);

// Maps a solution of `result.graph` back to a solution of the graph that was
// reduced: gadget choices are replaced by the centers they stand for and the
// forced vertices are added. The size never grows.
std::vector<VertexId> LiftSolution(const ReductionResult& result,
                                   std::span<const VertexId> kernel_solution);

}  // namespace dskernel

#endif  // DSKERNEL_REDUCTION_HPP_
