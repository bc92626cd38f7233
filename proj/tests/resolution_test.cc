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

#include <random>

#include <gtest/gtest.h>

#include "eil/corpus.h"
#include "eil/error.h"
#include "eil/field_rank.h"
#include "eil/monomial_ideal.h"
#include "eil/regularity.h"
#include "eil/resolution.h"
#include "eil/simplicial_complex.h"
#include "oracles.h"

namespace eil {
namespace {

std::vector<int64_t> H(const SimplicialComplex& k) { return ReducedHomology(k, Field{}); }

TEST(HomologyTest, Conventions) {
  const VertexSet tri{0, 1, 2};
  const SimplicialComplex hollow =
      SimplicialComplex::FromFacets(tri, {VertexSet({0, 1}), VertexSet({1, 2}), VertexSet({0, 2})});
  EXPECT_EQ(HomologyAt(H(hollow), 1), 1);
  EXPECT_EQ(HomologyAt(H(hollow), 0), 0);
  EXPECT_EQ(HomologyAt(H(hollow), -1), 0);

  const SimplicialComplex point = SimplicialComplex::FromFacets(VertexSet{0}, {VertexSet{0}});
  for (int k = -1; k <= 2; ++k) EXPECT_EQ(HomologyAt(H(point), k), 0);
  EXPECT_EQ(point.ConeApex(), 0);

  const SimplicialComplex empty = SimplicialComplex::Empty();
  EXPECT_EQ(empty.Dimension(), -1);
  EXPECT_EQ(HomologyAt(H(empty), -1), 1);

  const SimplicialComplex nothing = SimplicialComplex::Void();
  EXPECT_EQ(nothing.Dimension(), -2);
  EXPECT_TRUE(H(nothing).empty());

  const SimplicialComplex two_points =
      SimplicialComplex::FromFacets(VertexSet{0, 1}, {VertexSet{0}, VertexSet{1}});
  EXPECT_EQ(HomologyAt(H(two_points), 0), 1);
}

TEST(HomologyTest, RandomComplexesMatchOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    std::vector<VertexSet> facets;
    const int k = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) facets.push_back(VertexSet(static_cast<uint32_t>(rng()) & ((1u << n) - 1)));
    const SimplicialComplex c = SimplicialComplex::FromFacets(VertexSet::Range(n), facets);
    auto is_face = [&](uint32_t s) { return c.Contains(VertexSet(s)); };
    const auto want = oracle::ReducedHomology((1u << n) - 1, is_face, 32003);
    const auto got = H(c);
    for (int d = -1; d < n; ++d) {
      const auto it = want.find(d);
      ASSERT_EQ(HomologyAt(got, d), it == want.end() ? 0 : it->second) << "trial " << trial;
    }
  }
}

TEST(RankTest, PrimeAndRationalAgreeWithOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 8), c = 1 + static_cast<int>(rng() % 8);
    DenseMatrix m(r, c);
    std::vector<std::vector<int64_t>> rows(r, std::vector<int64_t>(c));
    std::vector<SparseColumn> cols(c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        const int64_t v = static_cast<int64_t>(rng() % 3) - 1;
        m.at(i, j) = v;
        rows[i][j] = v;
        if (v) cols[j].push_back({i, v});
      }
    const int want = oracle::RankModP(rows, 32003);
    ASSERT_EQ(RankModP(m, 32003), want);
    ASSERT_EQ(RankModPSparse(cols, 32003), want);
    ASSERT_EQ(RankRational(m), want);
    ASSERT_EQ(RankModP(m, 2), oracle::RankModP(rows, 2));
  }
}

TEST(RankTest, CharacteristicMatters) {
  DenseMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(1, 1) = -1;
  EXPECT_EQ(RankRational(m), 2);
  EXPECT_EQ(RankModP(m, 2), 1);
  EXPECT_THROW(Field::Prime(4), InvalidArgument);
  EXPECT_EQ(Field::Prime(2).ToString(), "GF(2)");
}

TEST(RegularityTest, EdgeCases) {
  EXPECT_EQ(RegularityQuotient(MonomialIdeal::Zero(3)), Regularity(0));
  EXPECT_TRUE(RegularityQuotient(MonomialIdeal::Unit(3)).IsMinusInfinity());
  EXPECT_EQ(RegularityQuotient(EdgeIdeal(Graph::Path(2))), Regularity(1));
  EXPECT_THROW(Regularity::MinusInfinity().value(), InvalidArgument);
  EXPECT_LT(Regularity::MinusInfinity(), Regularity(-100));
  EXPECT_TRUE((Regularity::MinusInfinity() + Regularity(3)).IsMinusInfinity());
}

oracle::ExpSet Gens(const Graph& g, const PowerSpec& spec) { return oracle::GensOf(GraphIdeal(g, spec)); }

TEST(RegularityTest, EdgeIdealsMatchHochster) {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : ConnectedGraphs(n)) {
      const int want = oracle::Regularity(Gens(g, PowerSpec::Plain()), n);
      ASSERT_EQ(RegularityDirect(g, PowerSpec::Plain()).value(), want) << FormatGraphText(g);
    }
}

TEST(RegularityTest, PowersMatchHochster) {
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : ConnectedGraphs(n))
      for (const PowerSpec spec : {PowerSpec::Ordinary(2), PowerSpec::Symbolic(2)}) {
        const int want = oracle::Regularity(Gens(g, spec), n);
        ASSERT_EQ(RegularityDirect(g, spec).value(), want) << FormatGraphText(g) << spec.ToString();
      }
  const Graph c5 = Graph::Cycle(5);
  EXPECT_EQ(RegularityDirect(c5, PowerSpec::Ordinary(2)).value(),
            oracle::Regularity(Gens(c5, PowerSpec::Ordinary(2)), 5));
  EXPECT_EQ(RegularityDirect(c5, PowerSpec::Symbolic(2)).value(),
            oracle::Regularity(Gens(c5, PowerSpec::Symbolic(2)), 5));
}

TEST(RegularityTest, FrameAgreesWithLattice) {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : ConnectedGraphs(n))
      for (const PowerSpec spec : {PowerSpec::Plain(), PowerSpec::Ordinary(2), PowerSpec::Symbolic(2)}) {
        const MonomialIdeal i = GraphIdeal(g, spec);
        ASSERT_EQ(RegularityQuotient(i), RegularityQuotientFromLattice(i)) << FormatGraphText(g);
      }
}

TEST(RegularityTest, RationalAgreesWithPrime) {
  RegularityOptions q, two;
  q.field = Field::Rational();
  two.field = Field::Prime(2);
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : ConnectedGraphs(n)) {
      const Regularity p = RegularityDirect(g, PowerSpec::Plain());
      ASSERT_EQ(RegularityDirect(g, PowerSpec::Plain(), q), p);
      ASSERT_EQ(RegularityDirect(g, PowerSpec::Plain(), two), p);
    }
}

TEST(RegularityTest, AdditiveMatchesDirectOnUnions) {
  const Graph u = DisjointUnion(DisjointUnion(Graph::Cycle(5), Graph::Path(2)), Graph::Edgeless(1));
  for (int r = 1; r <= 3; ++r) {
    for (const PowerSpec spec : {PowerSpec::Ordinary(r), PowerSpec::Symbolic(r)})
      EXPECT_EQ(RegularityAdditive(u, spec), RegularityDirect(u, spec)) << spec.ToString();
  }
  EXPECT_EQ(RegularityAdditive(u, PowerSpec::Plain()).value(), 3);
}

TEST(RegularityTest, FoldOfEdgeWithEdge) {
  // reg(S/I(K2)^(s)) = 2s - 1 in each factor.
  std::vector<Regularity> a{Regularity(), 1, 3, 5};
  const std::vector<Regularity> f = FoldSymbolic(a, a);
  const Graph two_k2 = DisjointUnion(Graph::Path(2), Graph::Path(2));
  for (int s = 1; s <= 3; ++s) EXPECT_EQ(f[s], RegularityDirect(two_k2, PowerSpec::Symbolic(s))) << s;
}

TEST(RegularityTest, ColonAndSumInequality) {
  // reg(S/I) <= max{reg(S/(I : f)) + deg f, reg(S/(I, f))}.
  std::mt19937_64 rng(23);
  int tested = 0;
  for (int n = 3; n <= 5; ++n)
    for (const Graph& g : ConnectedGraphs(n))
      for (const PowerSpec spec : {PowerSpec::Plain(), PowerSpec::Ordinary(2), PowerSpec::Symbolic(2)}) {
        const MonomialIdeal i = GraphIdeal(g, spec);
        const Regularity lhs = RegularityQuotient(i);
        for (int trial = 0; trial < 6; ++trial) {
          std::vector<int> e(n);
          for (int& x : e) x = static_cast<int>(rng() % 3 == 0);
          e[rng() % n] = 1 + static_cast<int>(rng() % 2);
          const Monomial f = Monomial::FromExponents(e);
          if (i.Contains(f)) continue;
          const Regularity colon = RegularityQuotient(Colon(i, f)) + Regularity(f.Degree());
          const Regularity sum = RegularityQuotient(AddGenerator(i, f));
          ASSERT_LE(lhs, std::max(colon, sum)) << FormatGraphText(g) << " f=" << f.ToString();
          ++tested;
        }
      }
  EXPECT_GT(tested, 200);
}

// Coarse Betti numbers of a squarefree ideal by Hochster's formula.
std::map<std::pair<int, int>, int64_t> HochsterBetti(const MonomialIdeal& ideal) {
  const int n = ideal.n();
  std::vector<uint32_t> sq;
  for (const Monomial& m : ideal.gens()) sq.push_back(m.Support().bits());
  auto is_face = [&](uint32_t f) {
    for (uint32_t s : sq)
      if ((s & f) == s) return false;
    return true;
  };
  std::map<std::pair<int, int>, int64_t> out;
  for (uint32_t sigma = 1; sigma < (1u << n); ++sigma) {
    const int size = std::popcount(sigma);
    for (const auto& [k, dim] : oracle::ReducedHomology(sigma, is_face, 32003)) {
      const int i = size - k - 1;  // homological degree for S/I
      if (i >= 1 && dim) out[{i - 1, size}] += dim;
    }
  }
  return out;
}

TEST(BettiTest, SquarefreeTablesMatchHochster) {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : ConnectedGraphs(n)) {
      const MonomialIdeal i = EdgeIdeal(g);
      for (const CandidateSource src : {CandidateSource::kLcmLattice, CandidateSource::kSchreyerFrame}) {
        BettiOptions o;
        o.source = src;
        const BettiTable t = ComputeBettiTable(i, o);
        std::map<std::pair<int, int>, int64_t> got(t.coarse.begin(), t.coarse.end());
        ASSERT_EQ(got, HochsterBetti(i)) << FormatGraphText(g);
        EXPECT_TRUE(GeneratorBettiConsistent(t, i));
        EXPECT_EQ(t.IdealRegularity() - 1, RegularityQuotient(i).value());
      }
    }
}

TEST(BettiTest, GeneratorsSitInDegreeZero) {
  for (const Graph& g : ConnectedGraphs(4))
    for (const PowerSpec spec : {PowerSpec::Ordinary(2), PowerSpec::Symbolic(3)}) {
      const MonomialIdeal i = GraphIdeal(g, spec);
      EXPECT_TRUE(GeneratorBettiConsistent(ComputeBettiTable(i), i));
    }
  EXPECT_THROW(ComputeBettiTable(MonomialIdeal::Zero(2)), InvalidArgument);
  EXPECT_THROW(ComputeBettiTable(MonomialIdeal::Unit(2)), InvalidArgument);
}

TEST(BettiTest, JsonShape) {
  const BettiTable t = ComputeBettiTable(EdgeIdeal(Graph::Cycle(4)));
  const Json j = t.ToJson();
  EXPECT_EQ(j.at("char"), 32003);
  EXPECT_TRUE(j.at("coarse").is_array());
  EXPECT_TRUE(j.at("fine").is_array());
}

}  // namespace
}  // namespace eil
