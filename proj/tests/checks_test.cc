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

#include <cstdlib>

#include <gtest/gtest.h>

#include "eil/checks.h"
#include "eil/corpus.h"
#include "eil/error.h"
#include "eil/report.h"

namespace eil {
namespace {

HTSpec Spec(const Graph& base, std::vector<std::pair<int, std::vector<int>>> atts) {
  HTSpec s;
  s.base = base;
  for (auto& [v, sizes] : atts) s.attachments.push_back({v, StarOfCliquesSpec{sizes}});
  s.Validate();
  return s;
}

HTSpec Bare(const Graph& g) { return Spec(g, {}); }

int Reg(Evaluator& ev, const Graph& g, PowerSpec spec) { return ev.Reg(g, spec, Deadline()).value(); }

// Values computed once by the engine and cross-checked against the
// closed forms for cycles; frozen here as regressions.
TEST(FrozenValuesTest, CyclesAndTheTriangleAttachment) {
  Evaluator ev;
  const Graph c5 = Graph::Cycle(5), c8 = Graph::Cycle(8), c10 = Graph::Cycle(10);
  const Graph c10k3 = AttachHT(Spec(c10, {{0, {3}}})).graph;
  const int c5_sym[] = {2, 3, 5};
  const int c8_sym[] = {3, 4, 6};
  const int c10_sym[] = {3, 5, 7};
  const int c10k3_sym[] = {4, 6, 8};
  for (int r = 1; r <= 3; ++r) {
    EXPECT_EQ(Reg(ev, c5, PowerSpec::Symbolic(r)), c5_sym[r - 1]) << r;
    EXPECT_EQ(Reg(ev, c8, PowerSpec::Symbolic(r)), c8_sym[r - 1]) << r;
    EXPECT_EQ(Reg(ev, c10, PowerSpec::Symbolic(r)), c10_sym[r - 1]) << r;
    EXPECT_EQ(Reg(ev, c10k3, PowerSpec::Symbolic(r)), c10k3_sym[r - 1]) << r;
  }
  // Ordinary powers of C5: 2r + nu - 2 for r >= 2.
  EXPECT_EQ(Reg(ev, c5, PowerSpec::Ordinary(2)), 3);
  EXPECT_EQ(Reg(ev, c5, PowerSpec::Ordinary(3)), 5);
  EXPECT_EQ(ev.Nu(c10k3), 4);
  EXPECT_EQ(ev.Cochord(c10k3, Deadline()).value(), 4);
}

TEST(FrozenValuesTest, FourComponentUnion) {
  Evaluator ev;
  CorpusSpec s;
  s.kind = CorpusKind::kNamed;
  s.name = "union-example";
  std::vector<Graph> parts;
  for (const CorpusInstance& inst : GenerateCorpus(s)) parts.push_back(inst.graph);
  EXPECT_EQ(ComponentwiseRegularity(ev, parts, PowerSpec::Plain()).value(), 13);
  // Fold of (3,4,6), (3,4,6), (3,5,7), (4,6,8).
  EXPECT_EQ(ComponentwiseRegularity(ev, parts, PowerSpec::Symbolic(2)).value(), 15);
  EXPECT_EQ(ComponentwiseRegularity(ev, parts, PowerSpec::Symbolic(3)).value(), 17);
}

TEST(ChecksTest, WorkedExamplesPass) {
  Evaluator ev;
  const Graph c3 = Graph::Cycle(3), c4 = Graph::Cycle(4), c5 = Graph::Cycle(5);
  const HTSpec c10k3 = Spec(Graph::Cycle(10), {{0, {3}}});
  const HTSpec c5k3 = Spec(c5, {{0, {3}}});
  const std::vector<TheoremCheck> checks = {
      CheckRegBounds(ev, c5, 2),
      CheckRegBounds(ev, Graph::Path(2), 3),
      CheckLowerSymbolic(ev, c3, 2),
      CheckThmBipartiteHT(ev, c10k3, 2),
      CheckCorCochordHT(ev, c10k3, 2),
      CheckThmUnicyclicReg(ev, c5k3),
      CheckThmUnicyclicReg(ev, Bare(Graph::Cycle(6))),
      CheckThmUnicyclicReg(ev, Bare(c5)),
      CheckMainUnicyclic(ev, Spec(c3, {{0, {2}}}), 2),
      CheckMainUnicyclic(ev, c5k3, 2),
      CheckPropOrdUni(ev, c5k3, 2),
      CheckPropSymUni(ev, c5k3, 2),
      CheckBipartitePowers(ev, c4, 3),
      CheckBipartitePowers(ev, c5, 3),
      CheckColonLemma(ev, Graph::Complete(3), 0, {}, {0, 1, 2}, 2),
      CheckColonLemma(ev, Graph::Path(3), 0, {}, {0, 1}, 2),
      CheckLemmaTech(ev, Graph::Path(4), 0, {0, 1}, 2),
      CheckPropRegSum(ev, Graph::Cycle(8), Graph::Path(2), 2),
      CheckPropRegSum(ev, c5, Graph::Path(2), 3),
      CheckPropNuCochord(ev, Graph::Star(3), std::nullopt, 2),
      CheckCorCamWal(ev, Graph::Star(3), std::nullopt, 2, 3),
  };
  for (const TheoremCheck& c : checks) EXPECT_EQ(c.verdict, Verdict::kPass) << c.ToJson().dump();
}

TEST(ChecksTest, PreconditionsSkip) {
  Evaluator ev;
  const TheoremCheck bare_c4 = CheckMainUnicyclic(ev, Bare(Graph::Cycle(4)), 2);
  EXPECT_EQ(bare_c4.verdict, Verdict::kSkipped);
  EXPECT_NE(bare_c4.reason.find("precondition"), std::string::npos);
  EXPECT_FALSE(bare_c4.cap_hit);
  const TheoremCheck odd_base = CheckThmBipartiteHT(ev, Spec(Graph::Cycle(5), {{0, {2}}}), 2);
  EXPECT_EQ(odd_base.verdict, Verdict::kSkipped);
  EXPECT_EQ(CheckBipartitePowers(ev, Graph::Edgeless(3), 2).verdict, Verdict::kSkipped);
}

TEST(ChecksTest, BipartitePowerWitnesses) {
  Evaluator ev;
  const TheoremCheck c3 = CheckBipartitePowers(ev, Graph::Cycle(3), 2);
  ASSERT_EQ(c3.verdict, Verdict::kPass);
  EXPECT_EQ(c3.evidence.at("witness").at("monomial"), "x0*x1*x2");
  EXPECT_EQ(c3.evidence.at("witness").at("r"), 2);
  // Odd girth 7 separates only at r = 4.
  const TheoremCheck c7 = CheckBipartitePowers(ev, Graph::Cycle(7), 3);
  EXPECT_EQ(c7.verdict, Verdict::kSkipped);
  EXPECT_EQ(c7.evidence.at("equal"), Json::array({true, true, true}));
  const TheoremCheck c7_4 = CheckBipartitePowers(ev, Graph::Cycle(7), 4);
  ASSERT_EQ(c7_4.verdict, Verdict::kPass);
  EXPECT_EQ(c7_4.evidence.at("witness").at("r"), 4);
  EXPECT_EQ(c7_4.evidence.at("witness").at("monomial"), "x0*x1*x2*x3*x4*x5*x6");
  EXPECT_EQ(OddGirth(Graph::Cycle(7)), 7);
  EXPECT_EQ(OddGirth(Graph::Cycle(8)), 0);
}

TEST(ChecksTest, BareOddCycleBreaksTheUnicyclicFormula) {
  // reg(S/I(C5)) = 2 but reg(S/I(C5)^2) = 3 < 2*2 + 2 - 2.
  Evaluator ev;
  const TheoremCheck c = CheckMainUnicyclic(ev, Bare(Graph::Cycle(5)), 2, /*allow_empty_t=*/true);
  ASSERT_EQ(c.verdict, Verdict::kFail);
  EXPECT_EQ(c.counterexample.at("r"), 2);
  EXPECT_EQ(c.counterexample.at("lhs"), 3);
  EXPECT_EQ(c.counterexample.at("rhs"), 4);
  std::string why;
  EXPECT_TRUE(ReverifyCounterexample(c.counterexample, CheckOptions{}, &why)) << why;
  Json tampered = c.counterexample;
  tampered["lhs"] = 4;
  EXPECT_FALSE(ReverifyCounterexample(tampered, CheckOptions{}, &why));
  EXPECT_NE(why.find("lhs"), std::string::npos);
  // With T nonempty the formula holds on the same cycle.
  EXPECT_EQ(CheckMainUnicyclic(ev, Spec(Graph::Cycle(5), {{0, {2}}}), 2).verdict, Verdict::kPass);
}

TEST(ChecksTest, GoldenRecordMismatchCarriesBundle) {
  const TheoremCheck ok = GoldenRecord("answer", Json::object(), 3, 3);
  EXPECT_EQ(ok.verdict, Verdict::kPass);
  const TheoremCheck bad = GoldenRecord("answer", Json{{"r", 2}}, 3, 4);
  ASSERT_EQ(bad.verdict, Verdict::kFail);
  EXPECT_EQ(bad.counterexample.at("lhs"), 4);
  EXPECT_EQ(bad.counterexample.at("rhs"), 3);
  EXPECT_EQ(GoldenRecord("answer", Json::object(), 3, std::nullopt, "cap").verdict,
            Verdict::kSkipped);
}

TEST(ChecksTest, RerunFromInstanceJson) {
  Evaluator ev;
  const std::vector<TheoremCheck> originals = {
      CheckRegBounds(ev, Graph::Cycle(6), 2),
      CheckBipartitePowers(ev, Graph::Cycle(5), 3),
      CheckColonLemma(ev, Graph::Path(3), 0, {1}, {0}, 2),
      CheckThmUnicyclicReg(ev, Spec(Graph::Cycle(4), {{1, {2, 3}}})),
  };
  for (const TheoremCheck& c : originals) {
    Evaluator fresh;
    const TheoremCheck again = RunCheckFromJson(fresh, c.id, c.instance);
    EXPECT_EQ(again.ToJson(false), c.ToJson(false));
    const TheoremCheck parsed = TheoremCheck::FromJson(c.ToJson());
    EXPECT_EQ(parsed.ToJson(false), c.ToJson(false));
  }
  EXPECT_THROW(RunCheckFromJson(ev, "NO_SUCH_CHECK", Json::object()), InvalidArgument);
}

TEST(ChecksTest, TinyTimeoutIsACapSkip) {
  CheckOptions o;
  o.timeout = std::chrono::milliseconds(0);
  Evaluator ev(o);
  const TheoremCheck c = CheckRegBounds(ev, Graph::Cycle(7), 2);
  EXPECT_EQ(c.verdict, Verdict::kSkipped);
  EXPECT_TRUE(c.cap_hit);
}

TEST(ReportTest, ExitCodes) {
  SuiteReport r;
  EXPECT_EQ(r.ExitCode(), kExitPass);
  TheoremCheck skip;
  skip.verdict = Verdict::kSkipped;
  r.checks.push_back(skip);
  EXPECT_EQ(r.ExitCode(), kExitPass);  // precondition skips do not count
  r.checks.back().cap_hit = true;
  EXPECT_EQ(r.ExitCode(), kExitSkips);
  EXPECT_EQ(r.ExitCode(/*skips_ok=*/true), kExitPass);
  TheoremCheck fail;
  fail.verdict = Verdict::kFail;
  r.checks.push_back(fail);
  EXPECT_EQ(r.ExitCode(true), kExitFail);
  EXPECT_EQ(r.Count(Verdict::kSkipped), 1);
}

TEST(ReportTest, SuitesAreDeterministic) {
  SuiteOptions o;
  o.timing = false;
  o.threads = 1;
  const SuiteReport a = RunSuite("regsum", o);
  o.threads = 2;
  const SuiteReport b = RunSuite("regsum", o);
  EXPECT_EQ(a.ToJson(false).dump(), b.ToJson(false).dump());
  EXPECT_EQ(a.ExitCode(), kExitPass);
  EXPECT_FALSE(a.ToJson(false).dump().empty());
  EXPECT_THROW(RunSuite("nope", o), InvalidArgument);
  for (const std::string& name : SuiteNames())
    EXPECT_NE(SuiteDescriptions().find(name), std::string::npos);
}

TEST(ReportTest, CorpusOverride) {
  SuiteOptions o;
  CorpusSpec s;
  s.kind = CorpusKind::kAllConnectedEq;
  s.max_vertices = 4;
  o.corpus = s;
  o.r_max = 2;
  const SuiteReport r = RunSuite("bounds", o);
  EXPECT_EQ(r.checks.size(), 2u * 6);
  EXPECT_EQ(r.r_max, 2);
  EXPECT_EQ(r.Count(Verdict::kPass), 12);
}

TEST(ReportTest, ThreadsFromEnvironment) {
  setenv("EIL_THREADS", "3", 1);
  EXPECT_EQ(ThreadsFromEnvironment(), 3);
  setenv("EIL_THREADS", "junk", 1);
  EXPECT_GE(ThreadsFromEnvironment(), 1);
  unsetenv("EIL_THREADS");
  EXPECT_GE(ThreadsFromEnvironment(), 1);
}

}  // namespace
}  // namespace eil
