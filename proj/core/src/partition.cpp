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

#include "dskernel/partition.hpp"

#include <algorithm>
#include <iterator>

namespace dskernel {
namespace {

// Classifies `base` (sorted, centers excluded) given a membership test for the
// closed neighborhood of the centers. Depth-two exploration: an exit is found
// at its first neighbor outside the closed neighborhood.
template <typename InClosed>
void Classify(const Graph& g, const std::vector<VertexId>& base,
              InClosed in_closed, TriPartition& out) {
  std::vector<VertexId> rest;
  for (VertexId u : base) {
    auto nbrs = g.Neighbors(u);
    bool exits = std::any_of(nbrs.begin(), nbrs.end(),
                             [&](VertexId x) { return !in_closed(x); });
    (exits ? out.exits : rest).push_back(u);
  }
  for (VertexId u : rest) {
    auto nbrs = g.Neighbors(u);
    bool guards = std::any_of(nbrs.begin(), nbrs.end(), [&](VertexId x) {
      return std::binary_search(out.exits.begin(), out.exits.end(), x);
    });
    (guards ? out.guards : out.prisoners).push_back(u);
  }
}

}  // namespace

TriPartition PartitionSingle(const Graph& g, VertexId v) {
  auto open = g.Neighbors(v);
  TriPartition out;
  out.centers = {v};
  std::vector<VertexId> base(open.begin(), open.end());
  Classify(
      g, base,
      [&](VertexId x) {
        return x == v || std::binary_search(open.begin(), open.end(), x);
      },
      out);
  return out;
}

TriPartition PartitionPair(const Graph& g, VertexId v, VertexId w) {
  if (v == w) throw GraphError("pair partition needs two distinct centers");
  auto nv = g.Neighbors(v);
  auto nw = g.Neighbors(w);
  TriPartition out;
  out.centers = {std::min(v, w), std::max(v, w)};
  std::vector<VertexId> base;
  base.reserve(nv.size() + nw.size());
  std::set_union(nv.begin(), nv.end(), nw.begin(), nw.end(),
                 std::back_inserter(base));
  std::erase_if(base, [&](VertexId x) { return x == v || x == w; });
  Classify(
      g, base,
      [&](VertexId x) {
        return x == v || x == w ||
               std::binary_search(nv.begin(), nv.end(), x) ||
               std::binary_search(nw.begin(), nw.end(), x);
      },
      out);
  return out;
}

}  // namespace dskernel
