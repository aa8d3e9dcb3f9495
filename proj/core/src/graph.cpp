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

#include "dskernel/graph.hpp"

#include <algorithm>
#include <sstream>

namespace dskernel {
namespace {

std::string DeadIdMessage(VertexId v) {
  std::ostringstream os;
  os << "vertex " << v << " is not live";
  return os.str();
}

bool SortedContains(std::span<const VertexId> range, VertexId v) {
  return std::binary_search(range.begin(), range.end(), v);
}

}  // namespace

VertexId Graph::AddVertex(Color color, Origin origin) {
  VertexId id{static_cast<std::uint32_t>(slots_.size())};
  slots_.push_back(Slot{true, color, origin, {}});
  ++live_count_;
  return id;
}

const Graph::Slot& Graph::LiveSlot(VertexId v) const {
  if (v.value >= slots_.size() || !slots_[v.value].alive) {
    throw GraphError(DeadIdMessage(v));
  }
  return slots_[v.value];
}

Graph::Slot& Graph::LiveSlot(VertexId v) {
  return const_cast<Slot&>(std::as_const(*this).LiveSlot(v));
}

void Graph::AddEdge(VertexId u, VertexId v) {
  if (u == v) {
    std::ostringstream os;
    os << "self-loop at " << u << " rejected";
    throw GraphError(os.str());
  }
  Slot& su = LiveSlot(u);
  Slot& sv = LiveSlot(v);
  auto it = std::lower_bound(su.adjacency.begin(), su.adjacency.end(), v);
  if (it != su.adjacency.end() && *it == v) return;
  su.adjacency.insert(it, v);
  sv.adjacency.insert(
      std::lower_bound(sv.adjacency.begin(), sv.adjacency.end(), u), u);
  ++edge_count_;
}

void Graph::RemoveEdge(VertexId u, VertexId v) {
  Slot& su = LiveSlot(u);
  Slot& sv = LiveSlot(v);
  auto it = std::lower_bound(su.adjacency.begin(), su.adjacency.end(), v);
  if (it == su.adjacency.end() || *it != v) return;
  su.adjacency.erase(it);
  sv.adjacency.erase(
      std::lower_bound(sv.adjacency.begin(), sv.adjacency.end(), u));
  --edge_count_;
}

void Graph::RemoveVertex(VertexId v) {
  Slot& sv = LiveSlot(v);
  for (VertexId u : sv.adjacency) {
    auto& adj = slots_[u.value].adjacency;
    adj.erase(std::lower_bound(adj.begin(), adj.end(), v));
  }
  edge_count_ -= sv.adjacency.size();
  sv.adjacency.clear();
  sv.adjacency.shrink_to_fit();
  sv.alive = false;
  --live_count_;
}

bool Graph::Contains(VertexId v) const {
  return v.value < slots_.size() && slots_[v.value].alive;
}

bool Graph::HasEdge(VertexId u, VertexId v) const {
  const Slot& su = LiveSlot(u);
  LiveSlot(v);
  return SortedContains(su.adjacency, v);
}

std::span<const VertexId> Graph::Neighbors(VertexId v) const {
  return LiveSlot(v).adjacency;
}

std::vector<VertexId> Graph::ClosedNeighborhood(VertexId v) const {
  const auto& adj = LiveSlot(v).adjacency;
  std::vector<VertexId> result;
  result.reserve(adj.size() + 1);
  auto pos = std::lower_bound(adj.begin(), adj.end(), v);
  result.insert(result.end(), adj.begin(), pos);
  result.push_back(v);
  result.insert(result.end(), pos, adj.end());
  return result;
}

bool Graph::WithinDistance(VertexId v, VertexId w, int max_distance) const {
  LiveSlot(v);
  LiveSlot(w);
  if (max_distance < 0) throw GraphError("negative distance bound");
  if (v == w) return true;
  std::vector<VertexId> ball = Ball(v, max_distance);
  return std::binary_search(ball.begin(), ball.end(), w);
}

std::vector<VertexId> Graph::Ball(VertexId v, int radius) const {
  LiveSlot(v);
  std::vector<bool> seen(slots_.size(), false);
  std::vector<VertexId> frontier{v};
  std::vector<VertexId> result{v};
  seen[v.value] = true;
  for (int depth = 0; depth < radius && !frontier.empty(); ++depth) {
    std::vector<VertexId> next;
    for (VertexId x : frontier) {
      for (VertexId y : slots_[x.value].adjacency) {
        if (seen[y.value]) continue;
        seen[y.value] = true;
        next.push_back(y);
        result.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

Color Graph::GetColor(VertexId v) const { return LiveSlot(v).color; }

void Graph::SetColor(VertexId v, Color color) { LiveSlot(v).color = color; }

Origin Graph::GetOrigin(VertexId v) const { return LiveSlot(v).origin; }

std::size_t Graph::CountVertices(Origin origin) const {
  return static_cast<std::size_t>(
      std::count_if(slots_.begin(), slots_.end(), [origin](const Slot& s) {
        return s.alive && s.origin == origin;
      }));
}

std::size_t Graph::CountVertices(Color color) const {
  return static_cast<std::size_t>(
      std::count_if(slots_.begin(), slots_.end(), [color](const Slot& s) {
        return s.alive && s.color == color;
      }));
}

std::vector<VertexId> Graph::Vertices() const {
  std::vector<VertexId> result;
  result.reserve(live_count_);
  for (std::uint32_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i].alive) result.push_back(VertexId{i});
  }
  return result;
}

bool Graph::Validate(std::string* why) const {
  auto fail = [why](const std::string& message) {
    if (why != nullptr) *why = message;
    return false;
  };
  std::size_t live = 0;
  std::size_t degree_sum = 0;
  for (std::uint32_t i = 0; i < slots_.size(); ++i) {
    const Slot& s = slots_[i];
    if (!s.alive) {
      if (!s.adjacency.empty()) {
        return fail("dead vertex " + std::to_string(i) + " has neighbors");
      }
      continue;
    }
    ++live;
    degree_sum += s.adjacency.size();
    for (std::size_t k = 0; k < s.adjacency.size(); ++k) {
      VertexId u = s.adjacency[k];
      if (k > 0 && !(s.adjacency[k - 1] < u)) {
        return fail("adjacency of " + std::to_string(i) +
                    " is not strictly sorted");
      }
      if (u.value == i) return fail("self-loop at " + std::to_string(i));
      if (u.value >= slots_.size() || !slots_[u.value].alive) {
        return fail("vertex " + std::to_string(i) + " points to dead " +
                    std::to_string(u.value));
      }
      if (!SortedContains(slots_[u.value].adjacency, VertexId{i})) {
        return fail("asymmetric edge " + std::to_string(i) + "-" +
                    std::to_string(u.value));
      }
    }
  }
  if (live != live_count_) return fail("live vertex counter out of sync");
  if (degree_sum != 2 * edge_count_) return fail("edge counter out of sync");
  return true;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.live_count_ == b.live_count_ && a.edge_count_ == b.edge_count_ &&
         a.slots_ == b.slots_;
}

}  // namespace dskernel
