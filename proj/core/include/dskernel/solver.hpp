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

#ifndef DSKERNEL_SOLVER_HPP_
#define DSKERNEL_SOLVER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "dskernel/graph.hpp"
#include "dskernel/reduction.hpp"

namespace dskernel {

// Black-and-white semantics throughout: only black vertices need a
// dominator, any vertex may dominate. An all-black graph is plain
// dominating set.
struct SolveResult {
  std::size_t gamma = 0;
  std::vector<VertexId> witness;  // sorted, |witness| == gamma
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kBruteForceVertexLimit = 26;

class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Exhaustive search by increasing set size; the witness is the
// lexicographically smallest optimal set. Throws SizeLimitError above
// kBruteForceVertexLimit live vertices.
SolveResult BruteForceGamma(const Graph& g);

// Reduce, then branch on the closed neighborhood of a minimum-degree black
// vertex of the kernel, recursively. Returns an optimal witness in terms of
// the ids of `g`.
SolveResult BranchAndReduce(const Graph& g, const Mode& mode);

// True iff every black vertex has a witness vertex in its closed
// neighborhood. Throws GraphError for ids that are not live.
bool VerifyCertificate(const Graph& g, std::span<const VertexId> witness);

}  // namespace dskernel

#endif  // DSKERNEL_SOLVER_HPP_
