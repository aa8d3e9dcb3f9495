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

#ifndef DSKERNEL_TESTS_SUPPORT_ORACLES_HPP_
#define DSKERNEL_TESTS_SUPPORT_ORACLES_HPP_

#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "dskernel/graph.hpp"
#include "dskernel/partition.hpp"
#include "dskernel/reduction.hpp"

// Test-only reference implementations. They evaluate the definitions
// literally and share no code path with the library routines they check.
namespace dskernel::testing {

using IdSet = std::set<std::uint32_t>;

inline IdSet OpenSet(const Graph& g, VertexId v) {
  IdSet s;
  for (VertexId u : g.Neighbors(v)) s.insert(u.value);
  return s;
}

struct LiteralPartition {
  IdSet exits, guards, prisoners;
};

// Evaluates the set-builder definitions over N(centers) \ centers.
inline LiteralPartition ClassifyLiterally(const Graph& g,
                                          const std::vector<VertexId>& centers) {
  IdSet open, closed;
  for (VertexId c : centers) {
    for (std::uint32_t u : OpenSet(g, c)) open.insert(u);
    closed.insert(c.value);
  }
  closed.insert(open.begin(), open.end());
  for (VertexId c : centers) open.erase(c.value);

  LiteralPartition p;
  for (std::uint32_t u : open) {
    // N(u) \ N[centers] != empty
    bool leaves = false;
    for (std::uint32_t x : OpenSet(g, VertexId{u})) {
      if (!closed.contains(x)) leaves = true;
    }
    if (leaves) p.exits.insert(u);
  }
  for (std::uint32_t u : open) {
    if (p.exits.contains(u)) continue;
    // N(u) intersect exits != empty
    bool touches = false;
    for (std::uint32_t x : OpenSet(g, VertexId{u})) {
      if (p.exits.contains(x)) touches = true;
    }
    if (touches) p.guards.insert(u);
  }
  for (std::uint32_t u : open) {
    if (!p.exits.contains(u) && !p.guards.contains(u)) p.prisoners.insert(u);
  }
  return p;
}

inline IdSet AsSet(const std::vector<VertexId>& ids) {
  IdSet s;
  for (VertexId v : ids) s.insert(v.value);
  return s;
}

// Minimum number of vertices whose closed neighborhoods cover every black
// vertex, by scanning all 2^n subsets. n <= 20.
inline std::size_t ExhaustiveGamma(const Graph& g) {
  std::vector<VertexId> vs = g.Vertices();
  if (vs.size() > 20) throw std::length_error("ExhaustiveGamma: n > 20");
  const std::size_t n = vs.size();
  std::vector<std::uint32_t> closed(n, 0);
  std::uint32_t black = 0;
  for (std::size_t i = 0; i < n; ++i) {
    closed[i] |= 1u << i;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && g.HasEdge(vs[i], vs[j])) closed[i] |= 1u << j;
    }
    if (g.IsBlack(vs[i])) black |= 1u << i;
  }
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    std::uint32_t covered = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) covered |= closed[i];
    }
    if ((covered & black) == black) best = size;
  }
  return best;
}

// Whether any single rule call of `mode` would fire anywhere, trying every
// vertex and every pair regardless of distance.
inline bool AnyRuleAppliesAllPairs(const Graph& g, const Mode& mode) {
  std::vector<VertexId> vs = g.Vertices();
  for (VertexId v : vs) {
    Graph copy = g;
    if (TryRule1(copy, v, mode)) return true;
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Graph copy = g;
      if (TryRule2(copy, vs[i], vs[j], mode)) return true;
    }
  }
  if (mode.extra_rules) {
    for (VertexId v : vs) {
      Graph copy = g;
      if (TryWhiteRules(copy, v)) return true;
    }
  }
  return false;
}

// Number of vertices v of a gadget-mode kernel violating: N3(v) is empty, or
// a single degree-1 vertex with N2(v) empty.
inline std::size_t SingleVertexResidueViolations(const Graph& g) {
  std::size_t violations = 0;
  for (VertexId v : g.Vertices()) {
    LiteralPartition p = ClassifyLiterally(g, {v});
    if (p.prisoners.empty()) continue;
    bool lone_pendant = p.prisoners.size() == 1 && p.guards.empty() &&
                        g.Degree(VertexId{*p.prisoners.begin()}) == 1;
    if (!lone_pendant) ++violations;
  }
  return violations;
}

}  // namespace dskernel::testing

#endif  // DSKERNEL_TESTS_SUPPORT_ORACLES_HPP_
