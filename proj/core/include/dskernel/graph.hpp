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

#ifndef DSKERNEL_GRAPH_HPP_
#define DSKERNEL_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dskernel {

// Opaque vertex handle. Ids are issued in increasing order and never reused
// within one Graph, so an id recorded in an event log stays unambiguous after
// the vertex is deleted.
struct VertexId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

inline std::ostream& operator<<(std::ostream& os, VertexId v) {
  return os << 'v' << v.value;
}

// Black vertices still have to be dominated; white ones are already covered.
enum class Color : std::uint8_t { kBlack, kWhite };

// Gadget vertices are the synthetic vertices attached by reduction rules.
enum class Origin : std::uint8_t { kOriginal, kGadget };

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mutable undirected simple graph with per-vertex color and origin.
//
// Adjacency is stored as one sorted vector per vertex: neighborhood iteration
// is O(deg), membership is O(log deg), and iteration order is deterministic.
// Not thread-safe for writers; concurrent const access is fine.
class Graph {
 public:
  Graph() = default;

  VertexId AddVertex(Color color = Color::kBlack,
                     Origin origin = Origin::kOriginal);

  // Idempotent. Throws GraphError on self-loops and dead ids.
  void AddEdge(VertexId u, VertexId v);
  void RemoveEdge(VertexId u, VertexId v);

  // Removes v together with all incident edges.
  void RemoveVertex(VertexId v);

  bool Contains(VertexId v) const;
  bool HasEdge(VertexId u, VertexId v) const;

  std::span<const VertexId> Neighbors(VertexId v) const;
  std::size_t Degree(VertexId v) const { return Neighbors(v).size(); }

  // N(v) u {v}, sorted.
  std::vector<VertexId> ClosedNeighborhood(VertexId v) const;

  // True iff some path of at most `max_distance` edges joins v and w.
  bool WithinDistance(VertexId v, VertexId w, int max_distance) const;

  // All vertices at distance <= radius from v (v included), sorted.
  std::vector<VertexId> Ball(VertexId v, int radius) const;

  Color GetColor(VertexId v) const;
  void SetColor(VertexId v, Color color);
  bool IsBlack(VertexId v) const { return GetColor(v) == Color::kBlack; }
  Origin GetOrigin(VertexId v) const;

  std::size_t VertexCount() const { return live_count_; }
  std::size_t EdgeCount() const { return edge_count_; }
  std::size_t CountVertices(Origin origin) const;
  std::size_t CountVertices(Color color) const;

  // Live vertices in ascending id order.
  std::vector<VertexId> Vertices() const;

  // One past the largest id ever issued; usable as a dense index bound.
  std::uint32_t IdBound() const {
    return static_cast<std::uint32_t>(slots_.size());
  }

  // Full scan of the representation invariants (symmetry, no self-loops,
  // sorted duplicate-free adjacency, counters). On failure, describes the
  // first violation in `*why` when given.
  bool Validate(std::string* why = nullptr) const;

  // Exact equality: same issued ids, same live set, adjacency, colors and
  // origins.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Slot {
    bool alive = false;
    Color color = Color::kBlack;
    Origin origin = Origin::kOriginal;
    std::vector<VertexId> adjacency;

    friend bool operator==(const Slot&, const Slot&) = default;
  };

  const Slot& LiveSlot(VertexId v) const;
  Slot& LiveSlot(VertexId v);

  std::vector<Slot> slots_;
  std::size_t live_count_ = 0;
  std::size_t edge_count_ = 0;
};

}  // namespace dskernel

template <>
struct std::hash<dskernel::VertexId> {
  std::size_t operator()(dskernel::VertexId v) const noexcept {
    return std::hash<std::uint32_t>{}(v.value);
  }
};

#endif  // DSKERNEL_GRAPH_HPP_
