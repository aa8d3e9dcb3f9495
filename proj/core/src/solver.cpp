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

#include "dskernel/solver.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

namespace dskernel {
namespace {

class SubsetSearch {
 public:
  SubsetSearch(std::vector<std::uint32_t> closed, std::uint32_t target)
      : closed_(std::move(closed)), target_(target) {}

  // Lexicographically first k-subset whose closed neighborhoods cover the
  // target mask.
  bool Find(std::size_t k) {
    chosen_.clear();
    return Extend(0, k, 0);
  }

  const std::vector<std::size_t>& chosen() const { return chosen_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool Extend(std::size_t start, std::size_t left, std::uint32_t covered) {
    ++nodes_;
    if ((covered & target_) == target_) return true;
    if (left == 0) return false;
    for (std::size_t i = start; i + left <= closed_.size(); ++i) {
      chosen_.push_back(i);
      if (Extend(i + 1, left - 1, covered | closed_[i])) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<std::uint32_t> closed_;
  std::uint32_t target_;
  std::vector<std::size_t> chosen_;
  std::uint64_t nodes_ = 0;
};

class BranchSearch {
 public:
  explicit BranchSearch(const Mode& root_mode)
      : root_mode_(root_mode),
        inner_mode_(Mode::Annotated(root_mode.extra_rules)) {}

  // Best solution of size < limit, or nullopt.
  std::optional<std::vector<VertexId>> Solve(Graph g, bool root,
                                             std::size_t limit) {
    ++nodes_;
    ReductionResult reduced = Reduce(std::move(g), root ? root_mode_
                                                        : inner_mode_);
    const std::size_t base = reduced.forced.size();
    if (base >= limit) return std::nullopt;
    const Graph& kernel = reduced.graph;

    std::optional<VertexId> pivot;
    for (VertexId u : kernel.Vertices()) {
      if (kernel.IsBlack(u) &&
          (!pivot || kernel.Degree(u) < kernel.Degree(*pivot))) {
        pivot = u;
      }
    }
    if (!pivot) return LiftSolution(reduced, {});

    std::optional<std::vector<VertexId>> best;
    std::size_t bound = limit - base;  // kernel solutions must stay below
    for (VertexId x : kernel.ClosedNeighborhood(*pivot)) {
      if (bound <= 1) break;
      Graph child = kernel;
      for (VertexId y : child.Neighbors(x)) child.SetColor(y, Color::kWhite);
      child.RemoveVertex(x);
      auto sub = Solve(std::move(child), false, bound - 1);
      if (!sub) continue;
      sub->push_back(x);
      bound = sub->size();
      best = std::move(sub);
    }
    if (!best) return std::nullopt;
    return LiftSolution(reduced, *best);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Mode root_mode_;
  Mode inner_mode_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult BruteForceGamma(const Graph& g) {
  if (g.VertexCount() > kBruteForceVertexLimit) {
    throw SizeLimitError("brute force is capped at " +
                         std::to_string(kBruteForceVertexLimit) +
                         " vertices, graph has " +
                         std::to_string(g.VertexCount()));
  }
  std::vector<VertexId> vertices = g.Vertices();
  std::vector<std::uint32_t> closed(vertices.size(), 0);
  std::uint32_t target = 0;
  auto index_of = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(vertices.begin(), vertices.end(), v) -
        vertices.begin());
  };
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    closed[i] |= std::uint32_t{1} << i;
    for (VertexId u : g.Neighbors(vertices[i])) {
      closed[i] |= std::uint32_t{1} << index_of(u);
    }
    if (g.IsBlack(vertices[i])) target |= std::uint32_t{1} << i;
  }

  SubsetSearch search(std::move(closed), target);
  SolveResult result;
  for (std::size_t k = 0; k <= vertices.size(); ++k) {
    if (search.Find(k)) {
      result.gamma = k;
      for (std::size_t i : search.chosen()) {
        result.witness.push_back(vertices[i]);
      }
      break;
    }
  }
  result.nodes_explored = search.nodes();
  return result;
}

SolveResult BranchAndReduce(const Graph& g, const Mode& mode) {
  mode.Validate();
  SolveResult result;
  if (g.CountVertices(Color::kBlack) == 0) return result;
  BranchSearch search(mode);
  auto solution =
      search.Solve(g, true, std::numeric_limits<std::size_t>::max());
  // Unbounded search always finds a solution (all vertices dominate).
  result.witness = std::move(*solution);
  result.gamma = result.witness.size();
  result.nodes_explored = search.nodes();
  return result;
}

bool VerifyCertificate(const Graph& g, std::span<const VertexId> witness) {
  std::vector<bool> chosen(g.IdBound(), false);
  for (VertexId x : witness) {
    if (!g.Contains(x)) {
      throw GraphError("witness vertex v" + std::to_string(x.value) +
                       " is not live");
    }
    chosen[x.value] = true;
  }
  for (VertexId u : g.Vertices()) {
    if (!g.IsBlack(u) || chosen[u.value]) continue;
    auto nbrs = g.Neighbors(u);
    if (std::none_of(nbrs.begin(), nbrs.end(),
                     [&](VertexId x) { return chosen[x.value]; })) {
      return false;
    }
  }
  return true;
}

}  // namespace dskernel
