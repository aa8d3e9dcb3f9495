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

#ifndef DSKERNEL_PLANGEN_HPP_
#define DSKERNEL_PLANGEN_HPP_

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "dskernel/graph.hpp"

namespace dskernel {

struct GenSpec {
  std::uint32_t n = 3;
  std::uint32_t m = 3;
  std::uint64_t seed = 0;

  static std::uint32_t MaxPlanarEdges(std::uint32_t n) { return 3 * n - 6; }

  // Throws std::invalid_argument unless n >= 3 and m <= 3n - 6.
  void Validate() const;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

struct FaceInsertion {
  VertexId vertex;
  std::array<VertexId, 3> face;
};

// Everything needed to rebuild a generated graph: the triangulation is grown
// by stacking one vertex into a face at a time (planar by construction), then
// edges are deleted.
struct PlanarConstruction {
  Graph graph;
  std::vector<FaceInsertion> insertions;
  std::vector<std::pair<VertexId, VertexId>> deleted_edges;
};

PlanarConstruction RandomPlanarWithHistory(const GenSpec& spec);

// Seeded random planar graph with exactly spec.m edges, all vertices black.
Graph RandomPlanar(const GenSpec& spec);

// Rebuilds a construction from its log alone; throws std::invalid_argument if
// an insertion targets a face that does not exist at that point.
Graph ReplayConstruction(std::uint32_t n,
                         const std::vector<FaceInsertion>& insertions,
                         const std::vector<std::pair<VertexId, VertexId>>&
                             deleted_edges);

inline constexpr std::array<std::uint32_t, 8> kExperimentSizes = {
    100, 500, 750, 1000, 1500, 2000, 3000, 4000};
inline constexpr std::uint32_t kInstancesPerSize = 100;

// `count` instances per size; edge targets uniform in [n, 3n - 6] and
// per-instance seeds derived from `seed` and the instance index.
std::vector<GenSpec> SampleSets(std::uint64_t seed,
                                const std::vector<std::uint32_t>& sizes,
                                std::uint32_t count);

// The eight 100-instance sample sets of the reference experiment.
std::vector<GenSpec> ExperimentSampleSets(std::uint64_t seed);

}  // namespace dskernel

#endif  // DSKERNEL_PLANGEN_HPP_
