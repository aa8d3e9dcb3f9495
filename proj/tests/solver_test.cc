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

#include <cstdint>
#include <random>

#include "dskernel/plangen.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "support/oracles.hpp"
#include "support/test_graphs.hpp"

namespace dskernel {
namespace {

using ::dskernel::testing::Cycle;
using ::dskernel::testing::ExhaustiveGamma;
using ::dskernel::testing::MakeGraph;
using ::dskernel::testing::MixedInstance;
using ::dskernel::testing::Path;
using ::dskernel::testing::Star;
using ::dskernel::testing::V;
using ::dskernel::testing::Whiten;
using ::testing::ElementsAre;
using ::testing::IsEmpty;

TEST(BruteForceTest, Star) {
  SolveResult r = BruteForceGamma(Star(3));
  EXPECT_EQ(r.gamma, 1u);
  EXPECT_THAT(r.witness, ElementsAre(V(0)));
}

TEST(BruteForceTest, PathAndCycle) {
  EXPECT_EQ(BruteForceGamma(Path(6)).gamma, 2u);
  EXPECT_EQ(BruteForceGamma(Cycle(4)).gamma, 2u);
  EXPECT_EQ(ExhaustiveGamma(Path(6)), 2u);
  EXPECT_EQ(ExhaustiveGamma(Cycle(4)), 2u);
}

TEST(BruteForceTest, WitnessIsLexicographicallyFirst) {
  // C4: {0,1} is the first pair that dominates.
  EXPECT_THAT(BruteForceGamma(Cycle(4)).witness, ElementsAre(V(0), V(1)));
}

TEST(BruteForceTest, WhiteVerticesNeedNoDominator) {
  Graph g = Path(3);
  g.SetColor(V(0), Color::kWhite);
  g.SetColor(V(2), Color::kWhite);
  SolveResult r = BruteForceGamma(g);
  EXPECT_EQ(r.gamma, 1u);
  Graph all_white = MakeGraph(3, {});
  for (VertexId v : all_white.Vertices()) all_white.SetColor(v, Color::kWhite);
  EXPECT_EQ(BruteForceGamma(all_white).gamma, 0u);
}

TEST(BruteForceTest, SizeCap) {
  Graph g = Path(kBruteForceVertexLimit + 1);
  EXPECT_THROW(BruteForceGamma(g), SizeLimitError);
  g.RemoveVertex(V(0));
  EXPECT_NO_THROW(BruteForceGamma(g));
}

TEST(BranchAndReduceTest, NoBlackVertices) {
  Graph g = Path(4);
  for (VertexId v : g.Vertices()) g.SetColor(v, Color::kWhite);
  SolveResult r = BranchAndReduce(g, Mode::Gadget());
  EXPECT_EQ(r.gamma, 0u);
  EXPECT_THAT(r.witness, IsEmpty());
}

TEST(BranchAndReduceTest, P6) {
  for (Mode mode : {Mode::Gadget(), Mode::Annotated(), Mode::Annotated(true)}) {
    SolveResult r = BranchAndReduce(Path(6), mode);
    EXPECT_EQ(r.gamma, 2u);
    EXPECT_TRUE(VerifyCertificate(Path(6), r.witness));
  }
}

TEST(BranchAndReduceTest, PlanarFiftyMatchesKernelOracle) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenSpec spec{50, 75, seed};
    Graph g = RandomPlanar(spec);
    ReductionResult reduced = Reduce(g, Mode::Annotated(true));
    if (reduced.graph.VertexCount() > kBruteForceVertexLimit) continue;
    std::size_t expected =
        reduced.forced.size() + BruteForceGamma(reduced.graph).gamma;
    SolveResult r = BranchAndReduce(g, Mode::Annotated(true));
    EXPECT_EQ(r.gamma, expected) << "seed " << seed;
    EXPECT_TRUE(VerifyCertificate(g, r.witness));
  }
}

TEST(VerifyCertificateTest, Star) {
  std::vector<VertexId> center{V(0)};
  std::vector<VertexId> leaf{V(1)};
  EXPECT_TRUE(VerifyCertificate(Star(3), center));
  EXPECT_FALSE(VerifyCertificate(Star(3), leaf));
}

TEST(VerifyCertificateTest, EmptyWitnessOnWhiteGraph) {
  Graph g = Path(3);
  for (VertexId v : g.Vertices()) g.SetColor(v, Color::kWhite);
  EXPECT_TRUE(VerifyCertificate(g, {}));
}

TEST(VerifyCertificateTest, UnknownIdThrows) {
  std::vector<VertexId> bogus{V(10)};
  EXPECT_THROW(VerifyCertificate(Star(3), bogus), GraphError);
}

TEST(SolverPropertyTest, AgreementCertificatesAndMinimality) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Graph g = MixedInstance(2718, i, 1, 14);
    if (i % 4 == 3) Whiten(g, i, 30);
    SolveResult brute = BruteForceGamma(g);
    ASSERT_EQ(brute.gamma, ExhaustiveGamma(g)) << "instance " << i;
    ASSERT_EQ(brute.witness.size(), brute.gamma);
    ASSERT_TRUE(VerifyCertificate(g, brute.witness));
    Mode mode = i % 4 == 3 ? Mode::Annotated(i % 8 == 7) : Mode::Gadget();
    SolveResult branch = BranchAndReduce(g, mode);
    ASSERT_EQ(branch.gamma, brute.gamma) << "instance " << i;
    ASSERT_EQ(branch.witness.size(), branch.gamma);
    ASSERT_TRUE(VerifyCertificate(g, branch.witness)) << "instance " << i;
  }
}

TEST(SolverPropertyTest, AddingAnEdgeNeverIncreasesGamma) {
  std::mt19937_64 rng(31337);
  for (std::uint64_t i = 0; i < 200; ++i) {
    Graph g = MixedInstance(161, i, 2, 14);
    std::vector<VertexId> vs = g.Vertices();
    VertexId a = vs[rng() % vs.size()];
    VertexId b = vs[rng() % vs.size()];
    if (a == b) continue;
    std::size_t before = BruteForceGamma(g).gamma;
    g.AddEdge(a, b);
    ASSERT_LE(BruteForceGamma(g).gamma, before) << "instance " << i;
  }
}

}  // namespace
}  // namespace dskernel
