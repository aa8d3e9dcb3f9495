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

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "support/test_graphs.hpp"

namespace dskernel {
namespace {

using ::dskernel::testing::MakeGraph;
using ::dskernel::testing::NeighborList;
using ::dskernel::testing::Path;
using ::dskernel::testing::Star;
using ::dskernel::testing::V;
using ::testing::ElementsAre;
using ::testing::IsEmpty;

TEST(GraphTest, FreshVertexIsIsolated) {
  Graph g;
  VertexId v = g.AddVertex();
  EXPECT_EQ(g.Degree(v), 0u);
  EXPECT_EQ(g.VertexCount(), 1u);
  EXPECT_TRUE(g.IsBlack(v));
  EXPECT_EQ(g.GetOrigin(v), Origin::kOriginal);
}

TEST(GraphTest, IdsAreDistinctAndNeverReused) {
  Graph g;
  VertexId a = g.AddVertex();
  VertexId b = g.AddVertex();
  EXPECT_NE(a, b);
  g.RemoveVertex(b);
  VertexId c = g.AddVertex();
  EXPECT_NE(c, a);
  EXPECT_NE(c, b);
  EXPECT_FALSE(g.Contains(b));
}

TEST(GraphTest, AddEdgeIsIdempotentAndSymmetric) {
  Graph g = MakeGraph(2, {});
  g.AddEdge(V(0), V(1));
  g.AddEdge(V(0), V(1));
  g.AddEdge(V(1), V(0));
  EXPECT_EQ(g.Degree(V(0)), 1u);
  EXPECT_EQ(g.EdgeCount(), 1u);
  EXPECT_THAT(NeighborList(g, V(1)), ElementsAre(V(0)));
}

TEST(GraphTest, RejectsSelfLoopsAndDeadIds) {
  Graph g = MakeGraph(2, {});
  EXPECT_THROW(g.AddEdge(V(0), V(0)), GraphError);
  EXPECT_THROW(g.AddEdge(V(0), V(7)), GraphError);
  g.RemoveVertex(V(1));
  EXPECT_THROW(g.AddEdge(V(0), V(1)), GraphError);
  EXPECT_THROW(g.RemoveVertex(V(1)), GraphError);
  EXPECT_THROW(g.ClosedNeighborhood(V(1)), GraphError);
  EXPECT_THROW(g.WithinDistance(V(0), V(1), 2), GraphError);
}

TEST(GraphTest, RemovingStarCenterLeavesIsolatedLeaves) {
  Graph g = Star(3);
  g.RemoveVertex(V(0));
  EXPECT_EQ(g.VertexCount(), 3u);
  EXPECT_EQ(g.EdgeCount(), 0u);
  for (VertexId v : g.Vertices()) EXPECT_EQ(g.Degree(v), 0u);
}

TEST(GraphTest, RemovingIsolatedVertexKeepsEdges) {
  Graph g = MakeGraph(3, {{0, 1}});
  g.RemoveVertex(V(2));
  EXPECT_EQ(g.EdgeCount(), 1u);
}

TEST(GraphTest, RemovingPathEndpoint) {
  Graph g = Path(2);
  g.RemoveVertex(V(1));
  EXPECT_EQ(g.VertexCount(), 1u);
  EXPECT_EQ(g.EdgeCount(), 0u);
}

TEST(GraphTest, ClosedNeighborhood) {
  Graph isolated = MakeGraph(1, {});
  EXPECT_THAT(isolated.ClosedNeighborhood(V(0)), ElementsAre(V(0)));
  Graph star = Star(3);
  EXPECT_THAT(star.ClosedNeighborhood(V(0)),
              ElementsAre(V(0), V(1), V(2), V(3)));
  EXPECT_THAT(star.ClosedNeighborhood(V(2)), ElementsAre(V(0), V(2)));
}

TEST(GraphTest, WithinDistance) {
  Graph p4 = Path(4);
  EXPECT_TRUE(p4.WithinDistance(V(0), V(3), 3));
  EXPECT_FALSE(p4.WithinDistance(V(0), V(3), 2));
  EXPECT_TRUE(p4.WithinDistance(V(2), V(2), 0));
  EXPECT_FALSE(p4.WithinDistance(V(1), V(2), 0));
}

TEST(GraphTest, BallIsSortedAndBounded) {
  Graph p5 = Path(5);
  EXPECT_THAT(p5.Ball(V(2), 1), ElementsAre(V(1), V(2), V(3)));
  EXPECT_THAT(p5.Ball(V(0), 0), ElementsAre(V(0)));
}

TEST(GraphTest, ColorsAndOrigins) {
  Graph g;
  VertexId a = g.AddVertex(Color::kWhite, Origin::kGadget);
  VertexId b = g.AddVertex();
  EXPECT_FALSE(g.IsBlack(a));
  EXPECT_EQ(g.CountVertices(Origin::kGadget), 1u);
  EXPECT_EQ(g.CountVertices(Color::kBlack), 1u);
  g.SetColor(b, Color::kWhite);
  EXPECT_EQ(g.CountVertices(Color::kWhite), 2u);
}

TEST(GraphTest, EqualityTracksIdsAndColors) {
  Graph a = Path(3);
  Graph b = Path(3);
  EXPECT_EQ(a, b);
  b.SetColor(V(1), Color::kWhite);
  EXPECT_NE(a, b);
  Graph c = Path(3);
  c.RemoveEdge(V(0), V(1));
  EXPECT_NE(a, c);
}

TEST(GraphTest, UnrelatedDeletionKeepsNeighborIds) {
  Graph g = MakeGraph(5, {{0, 1}, {0, 2}, {3, 4}});
  std::vector<VertexId> before(g.Neighbors(V(0)).begin(),
                               g.Neighbors(V(0)).end());
  g.RemoveVertex(V(4));
  EXPECT_THAT(NeighborList(g, V(0)), ::testing::ElementsAreArray(before));
}

// Randomized mutation fuzzing against a plain edge-set model.
TEST(GraphTest, RandomMutationsKeepInvariants) {
  std::mt19937_64 rng(20240611);
  Graph g;
  std::set<std::uint32_t> live;
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint32_t issued = 0;
  auto pick = [&]() {
    auto it = live.begin();
    std::advance(it, static_cast<long>(rng() % live.size()));
    return *it;
  };
  for (int op = 0; op < 20000; ++op) {
    unsigned kind = static_cast<unsigned>(rng() % 10);
    if (live.size() < 2 || kind < 2) {
      VertexId v = g.AddVertex();
      ASSERT_EQ(v.value, issued++);
      live.insert(v.value);
    } else if (kind < 7) {
      std::uint32_t a = pick();
      std::uint32_t b = pick();
      if (a == b) {
        EXPECT_THROW(g.AddEdge(V(a), V(b)), GraphError);
        continue;
      }
      g.AddEdge(V(a), V(b));
      edges.insert({std::min(a, b), std::max(a, b)});
    } else if (kind < 8 && !edges.empty()) {
      auto it = edges.begin();
      std::advance(it, static_cast<long>(rng() % edges.size()));
      g.RemoveEdge(V(it->first), V(it->second));
      edges.erase(it);
    } else {
      std::uint32_t a = pick();
      g.RemoveVertex(V(a));
      live.erase(a);
      std::erase_if(edges, [a](const auto& e) {
        return e.first == a || e.second == a;
      });
    }
    ASSERT_EQ(g.VertexCount(), live.size());
    ASSERT_EQ(g.EdgeCount(), edges.size());
  }
  std::string why;
  EXPECT_TRUE(g.Validate(&why)) << why;
  for (auto [a, b] : edges) EXPECT_TRUE(g.HasEdge(V(a), V(b)));
}

}  // namespace
}  // namespace dskernel
