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
#include "eil/invariants.h"
#include "eil/monomial_ideal.h"
#include "oracles.h"

namespace eil {
namespace {

Monomial M(std::vector<int> e) { return Monomial::FromExponents(e); }

TEST(MonomialTest, Arithmetic) {
  const Monomial a = M({2, 0, 1}), b = M({1, 3, 0});
  EXPECT_EQ(a.Degree(), 3);
  EXPECT_EQ(a.Support(), VertexSet({0, 2}));
  EXPECT_EQ(a.Lcm(b), M({2, 3, 1}));
  EXPECT_EQ(a.Gcd(b), M({1, 0, 0}));
  EXPECT_EQ(a * b, M({3, 3, 1}));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a.ColonBy(b), M({1, 0, 1}));
  EXPECT_TRUE(M({1, 0, 1}).Divides(a));
  EXPECT_FALSE(b.Divides(a));
  EXPECT_THROW(a / b, InvalidArgument);
  EXPECT_TRUE(Monomial(3).IsOne());
  EXPECT_EQ(Monomial::Squarefree(4, {1, 3}), M({0, 1, 0, 1}));
  EXPECT_EQ(Monomial::Variable(3, 2), M({0, 0, 1}));
}

TEST(MonomialTest, ParseForms) {
  EXPECT_EQ(ParseMonomial("x0^2*x2", 3), M({2, 0, 1}));
  EXPECT_EQ(ParseMonomial("x0^2x2", 3), M({2, 0, 1}));
  EXPECT_EQ(ParseMonomial("2,0,1", 3), M({2, 0, 1}));
  EXPECT_EQ(ParseMonomial("1", 3), Monomial(3));
  EXPECT_EQ(ParseMonomial(M({2, 0, 1}).ToString(), 3), M({2, 0, 1}));
  EXPECT_THROW(ParseMonomial("y1", 3), InvalidArgument);
  EXPECT_THROW(ParseMonomial("x5", 3), InvalidArgument);
  EXPECT_THROW(ParseMonomial("1,2", 3), InvalidArgument);
  EXPECT_THROW(ParseMonomial("", 3), InvalidArgument);
}

TEST(MonomialTest, ExponentOverflowIsCapped) {
  const Monomial big = M({200});
  EXPECT_THROW(big * big, CapExceeded);
}

TEST(IdealTest, MinimalizesAndSorts) {
  const MonomialIdeal i = MonomialIdeal::FromGenerators(
      2, {M({1, 1}), M({2, 1}), M({0, 2}), M({1, 1})});
  ASSERT_EQ(i.NumGens(), 2);
  EXPECT_LT(i.gens()[0], i.gens()[1]);
  EXPECT_TRUE(i.Contains(M({3, 1})));
  EXPECT_FALSE(i.Contains(M({1, 0})));
  EXPECT_TRUE(MonomialIdeal::Unit(2).IsUnit());
  EXPECT_TRUE(MonomialIdeal::Zero(2).IsZero());
  EXPECT_EQ(i.LcmOfGens(), M({1, 2}));
}

TEST(IdealTest, JsonRoundTrip) {
  const MonomialIdeal i = SymbolicPowerEdge(Graph::Cycle(5), 2);
  EXPECT_EQ(IdealFromJson(IdealToJson(i)), i);
  EXPECT_THROW(IdealFromJson(Json::object()), InvalidArgument);
}

// Random ideals in three variables with exponents <= 3.
MonomialIdeal RandomIdeal(std::mt19937_64& rng) {
  std::vector<Monomial> gens;
  const int k = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < k; ++i)
    gens.push_back(M({static_cast<int>(rng() % 4), static_cast<int>(rng() % 4),
                      static_cast<int>(rng() % 4)}));
  return MonomialIdeal::FromGenerators(3, gens);
}

TEST(IdealTest, OperationsMatchMembership) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const MonomialIdeal a = RandomIdeal(rng), b = RandomIdeal(rng);
    const Monomial f = M({static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
                          static_cast<int>(rng() % 3)});
    const MonomialIdeal meet = Intersect(a, b), join = Sum(a, b), colon = Colon(a, f);
    oracle::ForEachInBox(3, 7, [&](const std::vector<int>& e) {
      const Monomial m = M(e);
      ASSERT_EQ(meet.Contains(m), a.Contains(m) && b.Contains(m));
      ASSERT_EQ(join.Contains(m), a.Contains(m) || b.Contains(m));
      ASSERT_EQ(colon.Contains(m), a.Contains(m * f));
    });
    EXPECT_EQ(AddGenerator(a, f), Sum(a, MonomialIdeal::FromGenerators(3, {f})));
    EXPECT_EQ(AddVariableGen(a, 1), Sum(a, MonomialIdeal::FromGenerators(3, {M({0, 1, 0})})));
  }
}

TEST(PowerTest, MatchesProductsOfEdges) {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : ConnectedGraphs(n))
      for (int r = 1; r <= 3; ++r)
        ASSERT_EQ(oracle::GensOf(Power(EdgeIdeal(g), r)), oracle::PowerGens(g, r));
  EXPECT_THROW(Power(EdgeIdeal(Graph::Path(2)), kMaxPowerExponent + 1), CapExceeded);
  EXPECT_THROW(Power(EdgeIdeal(Graph::Path(2)), 0), InvalidArgument);
}

TEST(SymbolicTest, TriangleSquare) {
  const MonomialIdeal s = SymbolicPowerEdge(Graph::Cycle(3), 2);
  const oracle::ExpSet want{{1, 1, 1}, {2, 2, 0}, {2, 0, 2}, {0, 2, 2}};
  EXPECT_EQ(oracle::GensOf(s), want);
  EXPECT_EQ(oracle::SymbolicGens(Graph::Cycle(3), 2), want);
}

TEST(SymbolicTest, BoxIntersectionAndOracleAgree) {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : ConnectedGraphs(n))
      for (int r = 1; r <= 3; ++r) {
        const MonomialIdeal box = SymbolicPowerEdge(g, r);
        ASSERT_EQ(box, SymbolicPowerByIntersection(g, r)) << FormatGraphText(g) << " r=" << r;
        ASSERT_EQ(oracle::GensOf(box), oracle::SymbolicGens(g, r)) << FormatGraphText(g);
      }
}

TEST(SymbolicTest, MembershipMatchesCoverDefinition) {
  std::mt19937_64 rng(5);
  for (const Graph& g : ConnectedGraphs(5)) {
    const auto covers = oracle::MinimalCovers(g);
    const VertexCoverList list = MinimalVertexCovers(g);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> e(5);
      for (int& x : e) x = static_cast<int>(rng() % 4);
      const int r = 1 + static_cast<int>(rng() % 3);
      const bool want = oracle::InSymbolic(covers, e, r);
      ASSERT_EQ(SymbolicMembership(g, M(e), r), want);
      ASSERT_EQ(SymbolicMembership(list, M(e), r), want);
    }
  }
}

TEST(SymbolicTest, ContainsOrdinaryPower) {
  for (const Graph& g : ConnectedGraphs(5))
    for (int r = 1; r <= 3; ++r)
      EXPECT_TRUE(SymbolicPowerEdge(g, r).ContainsIdeal(Power(EdgeIdeal(g), r)));
}

TEST(SymbolicTest, PrimePowerIsPowerOfPrime) {
  const MonomialIdeal p = PrimePower(4, VertexSet({0, 2}), 2);
  EXPECT_EQ(oracle::GensOf(p), (oracle::ExpSet{{2, 0, 0, 0}, {1, 0, 1, 0}, {0, 0, 2, 0}}));
}

}  // namespace
}  // namespace eil
