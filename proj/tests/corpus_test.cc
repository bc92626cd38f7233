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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "eil/corpus.h"
#include "eil/error.h"
#include "eil/invariants.h"
#include "oracles.h"

namespace eil {
namespace {

TEST(CorpusTest, ConnectedGraphCounts) {
  const size_t want[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    const auto graphs = ConnectedGraphs(n);
    EXPECT_EQ(graphs.size(), want[n]) << "n=" << n;
    std::set<uint64_t> codes;
    for (const Graph& g : graphs) {
      EXPECT_TRUE(IsConnected(g));
      EXPECT_EQ(CanonicalForm(g), g);
      codes.insert(CanonicalCode(g));
    }
    EXPECT_EQ(codes.size(), graphs.size());
  }
}

TEST(CorpusTest, CanonicalFormIgnoresLabels) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = oracle::RandomGraph(n, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.push_back({perm[u], perm[v]});
    const Graph h = Graph::Build(n, e);
    ASSERT_EQ(CanonicalForm(g), CanonicalForm(h));
    ASSERT_EQ(CanonicalCode(g), CanonicalCode(h));
  }
  EXPECT_NE(CanonicalCode(Graph::Path(4)), CanonicalCode(Graph::Star(3)));
}

TEST(CorpusTest, ExhaustiveKinds) {
  CorpusSpec le;
  le.kind = CorpusKind::kAllConnectedLe;
  le.max_vertices = 5;
  EXPECT_EQ(GenerateCorpus(le).size(), 1u + 1 + 2 + 6 + 21);
  CorpusSpec eq = le;
  eq.kind = CorpusKind::kAllConnectedEq;
  EXPECT_EQ(GenerateCorpus(eq).size(), 21u);
  le.max_vertices = kMaxExhaustiveVertices + 1;
  EXPECT_THROW(le.Validate(), InvalidArgument);
}

CorpusSpec RandomSpec(CorpusKind kind, uint64_t seed) {
  CorpusSpec s;
  s.kind = kind;
  s.seed = seed;
  s.count = 25;
  s.min_vertices = 2;
  s.max_vertices = 6;
  s.total_max = 12;
  if (kind == CorpusKind::kRandomUnicyclicHT) s.base = BaseFamily::kUnicyclic;
  return s;
}

TEST(CorpusTest, RandomCorporaAreDeterministic) {
  for (CorpusKind kind : {CorpusKind::kRandomHT, CorpusKind::kRandomUnicyclicHT,
                          CorpusKind::kRandomCameronWalker}) {
    const auto a = GenerateCorpus(RandomSpec(kind, 42));
    const auto b = GenerateCorpus(RandomSpec(kind, 42));
    const auto c = GenerateCorpus(RandomSpec(kind, 43));
    ASSERT_EQ(a.size(), 25u);
    bool differs = false;
    for (size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].id, b[i].id);
      EXPECT_EQ(a[i].graph, b[i].graph);
      if (!(a[i].graph == c[i].graph)) differs = true;
    }
    EXPECT_TRUE(differs);
  }
}

TEST(CorpusTest, RandomHTRespectsSpec) {
  CorpusSpec s = RandomSpec(CorpusKind::kRandomHT, 7);
  s.count = 60;
  for (AttachMode mode : {AttachMode::kStarGraphs, AttachMode::kStarComplete, AttachMode::kMixed}) {
    s.attach = mode;
    for (const CorpusInstance& inst : GenerateCorpus(s)) {
      ASSERT_TRUE(inst.ht.has_value());
      const HTSpec& h = *inst.ht;
      EXPECT_TRUE(oracle::Bipartite(h.base));
      EXPECT_TRUE(IsConnected(h.base));
      EXPECT_LE(h.TotalVertices(), s.total_max);
      EXPECT_EQ(inst.graph, AttachHT(h).graph);
      EXPECT_FALSE(h.attachments.empty());
      if (mode == AttachMode::kStarGraphs) {
        EXPECT_EQ(h.p(), h.q());
      }
      if (mode == AttachMode::kStarComplete) {
        EXPECT_EQ(h.p(), 0);
      }
      if (mode == AttachMode::kMixed) {
        EXPECT_GT(h.p(), 0);
        EXPECT_LT(h.p(), h.q());
      }
    }
  }
}

TEST(CorpusTest, BaseFamilies) {
  CorpusSpec s = RandomSpec(CorpusKind::kRandomHT, 5);
  s.base = BaseFamily::kWeaklyChordalBipartite;
  s.t_vertex_cover = true;
  for (const CorpusInstance& inst : GenerateCorpus(s)) {
    EXPECT_TRUE(oracle::WeaklyChordal(inst.ht->base));
    EXPECT_TRUE(oracle::Bipartite(inst.ht->base));
    EXPECT_TRUE(oracle::Covers(inst.ht->base, inst.ht->T().bits()));
  }
  for (const CorpusInstance& inst : GenerateCorpus(RandomSpec(CorpusKind::kRandomUnicyclicHT, 5))) {
    const Graph& b = inst.ht->base;
    EXPECT_TRUE(IsConnected(b));
    EXPECT_EQ(b.NumEdges(), b.n());
    EXPECT_FALSE(inst.ht->attachments.empty());
  }
}

TEST(CorpusTest, CameronWalkerInstances) {
  CorpusSpec s = RandomSpec(CorpusKind::kRandomCameronWalker, 11);
  s.count = 60;
  for (const CorpusInstance& inst : GenerateCorpus(s)) {
    ASSERT_EQ(oracle::Matching(inst.graph, true), oracle::Matching(inst.graph, false)) << inst.id;
    EXPECT_TRUE(IsConnected(inst.graph));
    EXPECT_LE(inst.graph.n(), s.total_max);
  }
}

TEST(CorpusTest, JsonRoundTrip) {
  for (CorpusKind kind : {CorpusKind::kRandomHT, CorpusKind::kRandomCameronWalker}) {
    const CorpusSpec s = RandomSpec(kind, 3);
    const CorpusSpec back = CorpusSpec::FromJson(s.ToJson());
    EXPECT_EQ(back.ToJson(), s.ToJson());
    for (const CorpusInstance& inst : GenerateCorpus(s)) {
      const CorpusInstance r = CorpusInstanceFromJson(CorpusInstanceToJson(inst));
      EXPECT_EQ(r.id, inst.id);
      EXPECT_EQ(r.graph, inst.graph);
      EXPECT_EQ(r.ht.has_value(), inst.ht.has_value());
    }
  }
  EXPECT_THROW(CorpusSpec::FromJson(Json{{"kind", "nope"}}), InvalidArgument);
}

TEST(CorpusTest, NamedCorpora) {
  for (const std::string& name : NamedCorpora()) {
    CorpusSpec s;
    s.kind = CorpusKind::kNamed;
    s.name = name;
    EXPECT_FALSE(GenerateCorpus(s).empty()) << name;
  }
  CorpusSpec s;
  s.kind = CorpusKind::kNamed;
  s.name = "union-example";
  const auto parts = GenerateCorpus(s);
  ASSERT_EQ(parts.size(), 4u);
  int total = 0;
  for (const auto& p : parts) {
    total += p.graph.n();
    EXPECT_EQ(p.group, parts[0].group);
  }
  EXPECT_EQ(total, 8 + 8 + 10 + 12);
  s.name = "missing";
  EXPECT_THROW(GenerateCorpus(s), InvalidArgument);
}

TEST(CorpusRngTest, BoundedDrawsAreFixed) {
  CorpusRng a(1), b(1);
  std::vector<int> seen;
  for (int i = 0; i < 1000; ++i) {
    const int x = a.Uniform(3, 9);
    ASSERT_GE(x, 3);
    ASSERT_LE(x, 9);
    ASSERT_EQ(x, b.Uniform(3, 9));
    seen.push_back(x);
  }
  EXPECT_EQ(std::set<int>(seen.begin(), seen.end()).size(), 7u);
  CorpusRng c(1);
  EXPECT_EQ(c.Uniform(3, 9), seen[0]);
}

}  // namespace
}  // namespace eil
