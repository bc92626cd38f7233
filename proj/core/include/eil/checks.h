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

// Mechanical checks of regularity bounds and identities for edge ideals.
//
// Every check records its arguments in `instance`, so a check can be rerun
// from JSON alone (RunCheckFromJson). A failing check carries a bundle with
// the violated relation and both sides; ReverifyCounterexample reruns it
// from scratch and confirms the same violation.

#ifndef EIL_CHECKS_H_
#define EIL_CHECKS_H_

#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "eil/constructions.h"
#include "eil/graph.h"
#include "eil/graph_io.h"
#include "eil/invariants.h"
#include "eil/regularity.h"

namespace eil {

enum class Verdict { kPass, kFail, kSkipped };

const char* VerdictName(Verdict v);

struct TheoremCheck {
  std::string id;
  Json instance = Json::object();
  Verdict verdict = Verdict::kSkipped;
  std::string reason;
  Json evidence = Json::object();
  Json counterexample;  // null unless verdict == kFail
  bool cap_hit = false;
  double seconds = 0;

  Json ToJson(bool with_timing = true) const;
  static TheoremCheck FromJson(const Json& j);
};

struct CheckOptions {
  Field field;
  std::chrono::milliseconds timeout{120'000};
  int64_t frame_cap = kDefaultFrameCap;
  int64_t cochord_budget = 10'000'000;
  // Largest (r + 1)^n box explored for a symbolic power computed only as
  // a cross-check.
  int64_t direct_box_cap = int64_t{1} << 24;
};

// Memoizes regularity and invariants across checks. Thread safe.
class Evaluator {
 public:
  explicit Evaluator(CheckOptions options = {}) : options_(options) {}

  const CheckOptions& options() const { return options_; }

  // reg(S/J) for J = I(g), I(g)^r or I(g)^(r).
  Regularity Reg(const Graph& g, const PowerSpec& spec, const Deadline& deadline);
  int Nu(const Graph& g);
  CochordResult Cochord(const Graph& g, const Deadline& deadline);
  const MonomialIdeal& Symbolic(const Graph& g, int r);

 private:
  CheckOptions options_;
  std::mutex mu_;
  std::map<std::string, Regularity> reg_;
  std::map<std::string, int> nu_;
  std::map<std::string, CochordResult> cochord_;
  std::map<std::string, MonomialIdeal> symbolic_;
};

// 2r + nu - 2 <= reg(S/I^r) <= 2r + cochord - 2 for r = 1..r_max.
TheoremCheck CheckRegBounds(Evaluator& ev, const Graph& g, int r_max);
// 2r + nu - 2 <= reg(S/I^(r)).
TheoremCheck CheckLowerSymbolic(Evaluator& ev, const Graph& g, int r_max);
// reg(S/I(G)^(r)) <= max{reg(S/I(G\x)^(r)), reg(S/(I(G\A)^(r) : x_B)) + |B|}
// over partitions W = A u B with x in B.
TheoremCheck CheckLemmaTech(Evaluator& ev, const Graph& g, int x, VertexSet w, int r);
// Disjoint union of g1 and g2: the fold formula against a direct computation
// where feasible, and the additive upper bound with the best rho_i.
TheoremCheck CheckPropRegSum(Evaluator& ev, const Graph& g1, const Graph& g2, int r_max);
// reg(S/I(G)^(r)) <= 2r + reg(S/I(G)) - 2 on a bipartite base.
TheoremCheck CheckThmBipartiteHT(Evaluator& ev, const HTSpec& spec, int r_max);
// reg(S/I(G)^(r)) <= 2r + cochord(G) - 2 on a bipartite base.
TheoremCheck CheckCorCochordHT(Evaluator& ev, const HTSpec& spec, int r_max);
// nu = cochord under hypothesis 1 (weakly chordal bipartite base), 2
// (Cameron-Walker) or 3 (bipartite base, T a vertex cover).
TheoremCheck CheckPropNuCochord(Evaluator& ev, const Graph& g, const std::optional<HTSpec>& spec,
                                int which);
// reg(S/I^(r)) = reg(S/I^r) = 2r + nu - 2 under the same hypotheses.
TheoremCheck CheckCorCamWal(Evaluator& ev, const Graph& g, const std::optional<HTSpec>& spec,
                            int which, int r_max);
// nu <= reg <= nu + 1, with equality in the two residue cases.
TheoremCheck CheckThmUnicyclicReg(Evaluator& ev, const HTSpec& spec);
// reg(S/I^r) <= 2r + reg(S/I) - 2 on a unicyclic base.
TheoremCheck CheckPropOrdUni(Evaluator& ev, const HTSpec& spec, int r_max);
// reg(S/I^(r)) <= 2r + reg(S/I) - 2 on a unicyclic base.
TheoremCheck CheckPropSymUni(Evaluator& ev, const HTSpec& spec, int r_max);
// reg(S/I^(r)) = reg(S/I^r) = 2r + reg(S/I) - 2 on a unicyclic base with
// T nonempty. With allow_empty_t the bare unicyclic case is checked too.
TheoremCheck CheckMainUnicyclic(Evaluator& ev, const HTSpec& spec, int r_max,
                                bool allow_empty_t = false);
// Bipartite iff I^r = I^(r): equality for bipartite graphs, a witness in
// I^(r) \ I^r otherwise.
TheoremCheck CheckBipartitePowers(Evaluator& ev, const Graph& g, int r_max);
// (I(G\A)^(r) : x_B) = I(G\A)^(r-|B|+1), or the unit ideal when |B| > r,
// for x simplicial in G\A with closed neighborhood B.
TheoremCheck CheckColonLemma(Evaluator& ev, const Graph& g, int x, VertexSet a, VertexSet b,
                             int r);

// Named numeric records: `expected` against a computed value.
TheoremCheck GoldenRecord(const std::string& name, const Json& instance, int expected,
                          std::optional<int> got, const std::string& skip_reason = "");

// Dispatches on `id` with arguments as stored in TheoremCheck::instance.
TheoremCheck RunCheckFromJson(Evaluator& ev, const std::string& id, const Json& instance);

// Reruns a fail bundle with a fresh evaluator. True when the same relation
// fails with the same two sides.
bool ReverifyCounterexample(const Json& bundle, const CheckOptions& options,
                            std::string* why = nullptr);

// Whether hypothesis 1, 2 or 3 of CheckPropNuCochord holds.
bool NuCochordHypothesis(Evaluator& ev, const Graph& g, const std::optional<HTSpec>& spec,
                         int which);

// reg(S/J) for J the edge ideal or a symbolic power of the disjoint union of
// `components`, evaluated per component and folded; the union itself is
// never built, so it may exceed the vertex cap.
Regularity ComponentwiseRegularity(Evaluator& ev, const std::vector<Graph>& components,
                                   const PowerSpec& spec, const Deadline& deadline = {});

// Smallest odd cycle length, or 0 for bipartite graphs.
int OddGirth(const Graph& g);

}  // namespace eil

#endif  // EIL_CHECKS_H_
