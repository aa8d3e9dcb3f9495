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

#ifndef DSKERNEL_TESTS_SUPPORT_TEST_GRAPHS_HPP_
#define DSKERNEL_TESTS_SUPPORT_TEST_GRAPHS_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "dskernel/graph.hpp"
#include "dskernel/plangen.hpp"
#include "dskernel/random.hpp"

namespace dskernel::testing {

inline VertexId V(std::uint32_t i) { return VertexId{i}; }

// Graph on vertices 0..n-1 with the given edges, all black.
inline Graph MakeGraph(std::uint32_t n,
                       std::initializer_list<std::pair<int, int>> edges) {
  Graph g;
  for (std::uint32_t i = 0; i < n; ++i) g.AddVertex();
  for (auto [u, v] : edges) {
    g.AddEdge(V(static_cast<std::uint32_t>(u)),
              V(static_cast<std::uint32_t>(v)));
  }
  return g;
}

inline Graph Path(std::uint32_t n) {
  Graph g;
  for (std::uint32_t i = 0; i < n; ++i) g.AddVertex();
  for (std::uint32_t i = 0; i + 1 < n; ++i) g.AddEdge(V(i), V(i + 1));
  return g;
}

inline Graph Cycle(std::uint32_t n) {
  Graph g = Path(n);
  g.AddEdge(V(0), V(n - 1));
  return g;
}

// Center 0, leaves 1..leaves.
inline Graph Star(std::uint32_t leaves) {
  Graph g;
  for (std::uint32_t i = 0; i <= leaves; ++i) g.AddVertex();
  for (std::uint32_t i = 1; i <= leaves; ++i) g.AddEdge(V(0), V(i));
  return g;
}

// Sides {0..a-1} and {a..a+b-1}.
inline Graph CompleteBipartite(std::uint32_t a, std::uint32_t b) {
  Graph g;
  for (std::uint32_t i = 0; i < a + b; ++i) g.AddVertex();
  for (std::uint32_t i = 0; i < a; ++i) {
    for (std::uint32_t j = a; j < a + b; ++j) g.AddEdge(V(i), V(j));
  }
  return g;
}

// G(n, p) with a seeded engine; all black.
inline Graph ErdosRenyi(std::uint32_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g;
  for (std::uint32_t i = 0; i < n; ++i) g.AddVertex();
  const auto threshold = static_cast<std::uint64_t>(
      p * static_cast<double>(std::mt19937_64::max()));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (rng() < threshold) g.AddEdge(V(i), V(j));
    }
  }
  return g;
}

// Copy of the adjacency list; gmock matchers want a real container.
inline std::vector<VertexId> NeighborList(const Graph& g, VertexId v) {
  auto span = g.Neighbors(v);
  return {span.begin(), span.end()};
}

// Random instance family used by the property suites: even indices are
// planar (stacked triangulation minus edges), odd indices are G(n, p) with
// p in [0.1, 0.45].
inline Graph MixedInstance(std::uint64_t seed, std::uint64_t index,
                           std::uint32_t min_n, std::uint32_t max_n,
                           bool* planar = nullptr) {
  std::mt19937_64 rng(DeriveSeed(seed, index));
  auto n = static_cast<std::uint32_t>(UniformInRange(rng, min_n, max_n));
  bool is_planar = index % 2 == 0;
  if (planar != nullptr) *planar = is_planar;
  if (is_planar) {
    GenSpec spec;
    spec.n = std::max<std::uint32_t>(n, 3);
    spec.m = static_cast<std::uint32_t>(
        UniformInRange(rng, 0, GenSpec::MaxPlanarEdges(spec.n)));
    spec.seed = rng();
    return RandomPlanar(spec);
  }
  double p = 0.1 + 0.35 * static_cast<double>(UniformBelow(rng, 1000)) / 1000;
  return ErdosRenyi(n, p, rng());
}

// Paints roughly `white_percent` of the vertices white.
inline void Whiten(Graph& g, std::uint64_t seed, int white_percent) {
  std::mt19937_64 rng(seed);
  for (VertexId v : g.Vertices()) {
    if (static_cast<int>(UniformBelow(rng, 100)) < white_percent) {
      g.SetColor(v, Color::kWhite);
    }
  }
}

}  // namespace dskernel::testing

#endif  // DSKERNEL_TESTS_SUPPORT_TEST_GRAPHS_HPP_
