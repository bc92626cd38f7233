// Copyright 2026 The eil Authors.
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

#include <gtest/gtest.h>

#include "eil/certificates.h"
#include "eil/constructions.h"
#include "eil/corpus.h"
#include "eil/error.h"
#include "eil/invariants.h"
#include "oracles.h"

namespace eil {
namespace {

HTSpec Spec(const Graph& base, std::vector<std::pair<int, std::vector<int>>> atts) {
  HTSpec s;
  s.base = base;
  for (auto& [v, sizes] : atts) s.attachments.push_back({v, StarOfCliquesSpec{sizes}});
  return s;
}

TEST(StarOfCliquesTest, Shape) {
  const StarOfCliquesSpec spec{{2, 3, 4}};
  EXPECT_EQ(spec.VertexCount(), 1 + 1 + 2 + 3);
  EXPECT_FALSE(spec.IsStarGraph());
  const StarOfCliques k = BuildStarOfCliques(spec);
  EXPECT_EQ(k.center, 0);
  EXPECT_EQ(k.graph.n(), 7);
  EXPECT_EQ(k.graph.NumEdges(), 1 + 3 + 6);
  EXPECT_EQ(k.graph.Degree(0), 6);
  EXPECT_TRUE(oracle::Chordal(k.graph));
  EXPECT_TRUE((StarOfCliquesSpec{{2, 2}}.IsStarGraph()));
  EXPECT_THROW(StarOfCliquesSpec{{1}}.Validate(), InvalidArgument);
  EXPECT_THROW(StarOfCliquesSpec{{}}.Validate(), InvalidArgument);
}

TEST(AttachTest, LabelsAndLayout) {
  const HTSpec s = Spec(Graph::Cycle(4), {{1, {3}}, {3, {2, 2}}});
  s.Validate();
  const HTGraph h = AttachHT(s);
  EXPECT_EQ(h.graph.n(), 4 + 2 + 2);
  EXPECT_EQ(h.graph.NumEdges(), 4 + 3 + 2);
  EXPECT_EQ(s.T(), VertexSet({1, 3}));
  EXPECT_EQ(s.p(), 1);
  EXPECT_EQ(s.q(), 2);
  EXPECT_EQ(s.TotalVertices(), 8);
  ASSERT_EQ(h.layout.size(), 2u);
  EXPECT_FALSE(h.layout[0].star_graph);
  EXPECT_EQ(h.layout[0].vertices, VertexSet({1, 4, 5}));
  EXPECT_TRUE(h.layout[1].star_graph);
  EXPECT_EQ(h.layout[1].cliques.size(), 2u);
  // Base vertices keep their labels.
  const Graph c4 = Graph::Cycle(4);
  for (const Edge& e : c4.edges()) EXPECT_TRUE(h.graph.Adjacent(e.first, e.second));
}

TEST(AttachTest, EmptyTLeavesBaseUnchanged) {
  const HTSpec s = Spec(Graph::Cycle(5), {});
  EXPECT_EQ(AttachHT(s).graph, Graph::Cycle(5));
  EXPECT_EQ(Kappa(s), 0);
}

TEST(AttachTest, RejectsBadSpecs) {
  EXPECT_THROW(Spec(Graph::Cycle(4), {{4, {2}}}).Validate(), InvalidArgument);
  EXPECT_THROW(Spec(Graph::Cycle(4), {{1, {2}}, {1, {3}}}).Validate(), InvalidArgument);
  EXPECT_THROW(Spec(Graph::Cycle(4), {{1, {0}}}).Validate(), InvalidArgument);
}

TEST(AttachTest, FigureCounts) {
  // C5 with K2 at x1, K3 and K5 at x3, three K2 at x4, K2 and K4 at x5.
  const HTSpec s = Spec(Graph::Cycle(5), {{0, {2}}, {2, {3, 5}}, {3, {2, 2, 2}}, {4, {2, 4}}});
  s.Validate();
  EXPECT_EQ(Kappa(s), 12);
  EXPECT_EQ(s.attachments[1].star.VertexCount(), 7);
  EXPECT_EQ(s.attachments[3].star.VertexCount(), 5);
  EXPECT_EQ(s.p(), 2);
}

TEST(AttachTest, JsonRoundTrip) {
  const HTSpec s = Spec(Graph::Path(3), {{0, {2, 3}}, {2, {4}}});
  const HTSpec back = HTSpecFromJson(HTSpecToJson(s));
  EXPECT_EQ(back.base, s.base);
  ASSERT_EQ(back.attachments.size(), 2u);
  EXPECT_EQ(back.attachments[0].star.clique_sizes, (std::vector<int>{2, 3}));
  EXPECT_EQ(AttachHT(back).graph, AttachHT(s).graph);
}

TEST(UnicyclicTest, DecomposesCycleWithTriangle) {
  const HTSpec s = Spec(Graph::Cycle(5), {{0, {3}}});
  const UnicyclicDecomposition d = DecomposeUnicyclic(s);
  EXPECT_EQ(d.cycle, (std::vector<int>{0, 1, 2, 3, 4}));
  ASSERT_EQ(d.attach_points, std::vector<int>{0});
  EXPECT_EQ(d.parts[0], VertexSet({0, 5, 6}));
  EXPECT_EQ(d.gamma, VertexSet({5, 6}));
  EXPECT_TRUE(d.h_parts[0].Empty());
}

TEST(UnicyclicTest, TreesHangingOffTheCycle) {
  // C6 with a path 0-6-7 and a leaf 8 at vertex 3.
  const Graph g = Graph::Build(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                   {0, 6}, {6, 7}, {3, 8}});
  const UnicyclicDecomposition d = DecomposeUnicyclic(g);
  EXPECT_EQ(d.cycle.size(), 6u);
  EXPECT_EQ(d.attach_points, (std::vector<int>{0, 3}));
  EXPECT_EQ(d.gamma, VertexSet({6, 8}));
  EXPECT_EQ(d.h_parts[0], VertexSet({7}));
  EXPECT_TRUE(d.h_parts[1].Empty());
  EXPECT_THROW(DecomposeUnicyclic(DisjointUnion(Graph::Cycle(3), Graph::Path(2))),
               InvalidArgument);
}

TEST(HTCoverTest, ThreeCasesValidate) {
  const Graph c4 = Graph::Cycle(4);
  const std::vector<HTSpec> specs = {
      Spec(c4, {{0, {2}}, {2, {2, 2}}}),
      Spec(c4, {{0, {3}}, {2, {4}}}),
      Spec(c4, {{0, {2}}, {2, {3}}}),
  };
  const CoverCase want[] = {CoverCase::kAllStarGraphs, CoverCase::kAllStarComplete,
                            CoverCase::kMixed};
  for (size_t i = 0; i < specs.size(); ++i) {
    const HTCover c = ConstructCochordalCoverHT(specs[i]);
    const Graph g = AttachHT(specs[i]).graph;
    std::string why;
    EXPECT_TRUE(ValidateCoChordalCover(g, c.cover, &why)) << why;
    EXPECT_EQ(c.which, want[i]);
    EXPECT_EQ(static_cast<int>(c.cover.parts.size()), oracle::Matching(g, true));
  }
}

TEST(HTCoverTest, RequiresVertexCover) {
  EXPECT_THROW(ConstructCochordalCoverHT(Spec(Graph::Cycle(4), {{0, {2}}})), InvalidArgument);
  EXPECT_THROW(ConstructCochordalCoverHT(Spec(Graph::Cycle(5), {{0, {2}}, {1, {2}}, {3, {2}}})),
               InvalidArgument);
}

TEST(HTCoverTest, RandomVertexCoverCorporaMatchNu) {
  CorpusSpec cs;
  cs.kind = CorpusKind::kRandomHT;
  cs.base = BaseFamily::kBipartite;
  cs.t_vertex_cover = true;
  cs.min_vertices = 2;
  cs.max_vertices = 6;
  cs.total_max = 12;
  cs.count = 40;
  cs.seed = 99;
  for (const CorpusInstance& inst : GenerateCorpus(cs)) {
    const HTCover c = ConstructCochordalCoverHT(*inst.ht);
    std::string why;
    ASSERT_TRUE(ValidateCoChordalCover(inst.graph, c.cover, &why)) << inst.id << ": " << why;
    EXPECT_EQ(static_cast<int>(c.cover.parts.size()), InducedMatchingNumber(inst.graph).count)
        << inst.id;
  }
}

}  // namespace
}  // namespace eil
