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

#include "dskernel/plangen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "dskernel/random.hpp"

namespace dskernel {
namespace {

using Face = std::array<VertexId, 3>;

Face Sorted(Face f) {
  std::sort(f.begin(), f.end());
  return f;
}

// Replaces `faces[index]` by the three faces around the new vertex.
void SplitFace(std::vector<Face>& faces, std::size_t index, VertexId x) {
  Face f = faces[index];
  faces[index] = Sorted({f[0], f[1], x});
  faces.push_back(Sorted({f[1], f[2], x}));
  faces.push_back(Sorted({f[0], f[2], x}));
}

void Stack(Graph& g, VertexId x, const Face& f) {
  for (VertexId c : f) g.AddEdge(x, c);
}

Graph Triangle(std::uint32_t n, std::vector<Face>& faces) {
  Graph g;
  for (std::uint32_t i = 0; i < n; ++i) g.AddVertex();
  g.AddEdge(VertexId{0}, VertexId{1});
  g.AddEdge(VertexId{1}, VertexId{2});
  g.AddEdge(VertexId{0}, VertexId{2});
  // Inner and outer face of the initial triangle.
  Face t = {VertexId{0}, VertexId{1}, VertexId{2}};
  faces = {t, t};
  return g;
}

}  // namespace

void GenSpec::Validate() const {
  if (n < 3) {
    throw std::invalid_argument("planar generator needs n >= 3, got " +
                                std::to_string(n));
  }
  if (m > MaxPlanarEdges(n)) {
    throw std::invalid_argument("m = " + std::to_string(m) +
                                " exceeds the planar bound 3n-6 = " +
                                std::to_string(MaxPlanarEdges(n)));
  }
}

PlanarConstruction RandomPlanarWithHistory(const GenSpec& spec) {
  spec.Validate();
  std::mt19937_64 rng(spec.seed);
  PlanarConstruction out;
  std::vector<Face> faces;
  out.graph = Triangle(spec.n, faces);

  for (std::uint32_t i = 3; i < spec.n; ++i) {
    VertexId x{i};
    std::size_t index =
        static_cast<std::size_t>(UniformBelow(rng, faces.size()));
    Face f = faces[index];
    Stack(out.graph, x, f);
    SplitFace(faces, index, x);
    out.insertions.push_back({x, f});
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u : out.graph.Vertices()) {
    for (VertexId v : out.graph.Neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  ShuffleInPlace(edges, rng);
  std::size_t excess = edges.size() - spec.m;
  for (std::size_t i = 0; i < excess; ++i) {
    out.graph.RemoveEdge(edges[i].first, edges[i].second);
    out.deleted_edges.push_back(edges[i]);
  }
  return out;
}

Graph RandomPlanar(const GenSpec& spec) {
  return RandomPlanarWithHistory(spec).graph;
}

Graph ReplayConstruction(
    std::uint32_t n, const std::vector<FaceInsertion>& insertions,
    const std::vector<std::pair<VertexId, VertexId>>& deleted_edges) {
  if (n < 3) throw std::invalid_argument("construction needs n >= 3");
  std::vector<Face> faces;
  Graph g = Triangle(n, faces);
  for (const FaceInsertion& step : insertions) {
    Face key = Sorted(step.face);
    auto it = std::find(faces.begin(), faces.end(), key);
    if (it == faces.end() || !g.Contains(step.vertex) ||
        g.Degree(step.vertex) != 0) {
      throw std::invalid_argument("insertion of v" +
                                  std::to_string(step.vertex.value) +
                                  " does not match a current face");
    }
    Stack(g, step.vertex, key);
    SplitFace(faces, static_cast<std::size_t>(it - faces.begin()),
              step.vertex);
  }
  for (const auto& [u, v] : deleted_edges) g.RemoveEdge(u, v);
  return g;
}

std::vector<GenSpec> SampleSets(std::uint64_t seed,
                                const std::vector<std::uint32_t>& sizes,
                                std::uint32_t count) {
  std::vector<GenSpec> specs;
  specs.reserve(sizes.size() * count);
  std::uint64_t index = 0;
  for (std::uint32_t n : sizes) {
    for (std::uint32_t k = 0; k < count; ++k, ++index) {
      std::uint64_t instance_seed = DeriveSeed(seed, index);
      std::mt19937_64 rng(instance_seed);
      GenSpec spec;
      spec.n = n;
      spec.m = static_cast<std::uint32_t>(
          UniformInRange(rng, n, GenSpec::MaxPlanarEdges(n)));
      spec.seed = rng();
      spec.Validate();
      specs.push_back(spec);
    }
  }
  return specs;
}

std::vector<GenSpec> ExperimentSampleSets(std::uint64_t seed) {
  return SampleSets(seed,
                    std::vector<std::uint32_t>(kExperimentSizes.begin(),
                                               kExperimentSizes.end()),
                    kInstancesPerSize);
}

}  // namespace dskernel
