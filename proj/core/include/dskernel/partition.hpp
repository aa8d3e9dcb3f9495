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

#ifndef DSKERNEL_PARTITION_HPP_
#define DSKERNEL_PARTITION_HPP_

#include <vector>

#include "dskernel/graph.hpp"

namespace dskernel {

// Split of the open neighborhood of one center vertex, or of the union of the
// open neighborhoods of two centers with the centers themselves excluded.
//
//   exits     - members with a neighbor outside the closed neighborhood of
//               the center(s);
//   guards    - non-exits adjacent to some exit;
//   prisoners - the rest. Prisoners can only be dominated from the centers,
//               the guards or the prisoners.
//
// All three vectors are sorted and pairwise disjoint.
struct TriPartition {
  std::vector<VertexId> centers;
  std::vector<VertexId> exits;
  std::vector<VertexId> guards;
  std::vector<VertexId> prisoners;
};

// Throws GraphError when v is not live.
TriPartition PartitionSingle(const Graph& g, VertexId v);

// Throws GraphError when v == w or either is not live.
TriPartition PartitionPair(const Graph& g, VertexId v, VertexId w);

}  // namespace dskernel

#endif  // DSKERNEL_PARTITION_HPP_
