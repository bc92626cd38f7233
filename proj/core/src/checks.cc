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

#include "eil/checks.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>

#include "eil/certificates.h"
#include "eil/error.h"
#include "eil/monomial_ideal.h"

namespace eil {
namespace {

// A violated precondition; the check is skipped, not failed.
class Precondition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void Require(bool ok, const std::string& what) {
  if (!ok) throw Precondition(what);
}

std::string GraphKey(const Graph& g) { return FormatGraphText(g); }

// g with the edges at `gone` removed; labels are kept so ideals share a ring.
Graph Isolate(const Graph& g, VertexSet gone) {
  std::vector<Edge> kept;
  for (auto [u, v] : g.edges())
    if (!gone.Contains(u) && !gone.Contains(v)) kept.emplace_back(u, v);
  return SpanningSubgraph(g, kept);
}

Monomial SquarefreeOf(int n, VertexSet s) { return Monomial::Squarefree(n, s); }

Json SetJson(VertexSet s) { return Json(s.ToVector()); }

VertexSet SetFromJson(const Json& j) {
  VertexSet s;
  for (const auto& v : j) {
    const int x = v.get<int>();
    if (x < 0 || x >= kMaxVertices) throw InvalidArgument("vertex out of range");
    s.Insert(x);
  }
  return s;
}

bool HasExactlyOneCycle(const Graph& g) {
  return g.NumEdges() == g.n() - static_cast<int>(ConnectedComponents(g).size()) + 1;
}

RegularityOptions RegOptions(const Evaluator& ev, const Deadline& dl) {
  return RegularityOptions{ev.options().field, ev.options().frame_cap, dl};
}

int Val(const Regularity& r) { return r.value(); }

// Runs `body` with timing, converting caps, timeouts and preconditions to
// skipped verdicts and internal errors to failures.
template <typename Body>
TheoremCheck Guarded(std::string id, Json instance, Evaluator& ev, Body body) {
  TheoremCheck c;
  c.id = std::move(id);
  c.instance = std::move(instance);
  const auto start = std::chrono::steady_clock::now();
  const Deadline dl(ev.options().timeout);
  try {
    body(c, dl);
    if (c.verdict != Verdict::kFail && c.reason.empty()) c.verdict = Verdict::kPass;
  } catch (const Precondition& e) {
    c.verdict = Verdict::kSkipped;
    c.reason = std::string("precondition: ") + e.what();
  } catch (const CapExceeded& e) {
    if (c.verdict != Verdict::kFail) {
      c.verdict = Verdict::kSkipped;
      c.reason = std::string("cap: ") + e.what();
    }
    c.cap_hit = true;
  } catch (const DeadlineExceeded& e) {
    if (c.verdict != Verdict::kFail) {
      c.verdict = Verdict::kSkipped;
      c.reason = std::string("timeout: ") + e.what();
    }
    c.cap_hit = true;
  } catch (const InternalError& e) {
    c.verdict = Verdict::kFail;
    c.reason = std::string("internal error: ") + e.what();
    c.counterexample = Json{{"check", c.id}, {"instance", c.instance},
                            {"relation", "internal"}, {"message", e.what()}};
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

// Records the first violated relation.
void Fail(TheoremCheck& c, int r, const std::string& relation, const Json& lhs, const Json& rhs) {
  if (c.verdict == Verdict::kFail) return;
  c.verdict = Verdict::kFail;
  c.reason = relation + " violated" + (r > 0 ? " at r = " + std::to_string(r) : "");
  Json bundle;
  bundle["check"] = c.id;
  bundle["instance"] = c.instance;
  if (c.instance.contains("graph")) bundle["graph"] = c.instance["graph"];
  if (c.instance.contains("ht")) {
    bundle["ht"] = c.instance["ht"];
    bundle["graph"] = GraphToJson(AttachHT(HTSpecFromJson(c.instance["ht"])).graph);
  }
  bundle["r"] = r;
  bundle["relation"] = relation;
  bundle["lhs"] = lhs;
  bundle["rhs"] = rhs;
  c.counterexample = std::move(bundle);
}

void Skip(TheoremCheck& c, const std::string& why) {
  if (c.verdict == Verdict::kFail) return;
  c.verdict = Verdict::kSkipped;
  if (c.reason.empty()) c.reason = why;
}

Json CochordJson(const CochordResult& cc) {
  Json j{{"lower", cc.lower}, {"upper", cc.upper}, {"exact", cc.exact}};
  if (cc.cover) j["cover"] = ToJson(*cc.cover);
  return j;
}

Graph GraphOf(const HTSpec& spec) { return AttachHT(spec).graph; }

// Hypotheses of the three nu = cochord cases.
void RequireCase(Evaluator& ev, int which, const Graph& g, const std::optional<HTSpec>& spec) {
  switch (which) {
    case 1:
      Require(spec.has_value(), "case 1 needs an H_T spec");
      Require(IsBipartite(spec->base).bipartite, "base is not bipartite");
      Require(IsWeaklyChordal(spec->base), "base is not weakly chordal");
      break;
    case 2:
      Require(ev.Nu(g) == MatchingNumber(g).count, "graph is not Cameron-Walker");
      break;
    case 3:
      Require(spec.has_value(), "case 3 needs an H_T spec");
      Require(IsBipartite(spec->base).bipartite, "base is not bipartite");
      Require(IsVertexCover(spec->base, spec->T()), "T is not a vertex cover of the base");
      break;
    default:
      throw InvalidArgument("case must be 1, 2 or 3");
  }
  if (spec) Require(GraphOf(*spec) == g, "graph does not match its H_T spec");
}

Json InstanceGraph(const Graph& g, const std::optional<HTSpec>& spec) {
  Json j;
  j["graph"] = GraphToJson(g);
  if (spec) j["ht"] = HTSpecToJson(*spec);
  return j;
}

// Shortest odd cycle as a vertex list, empty when bipartite.
std::vector<int> ShortestOddCycle(const Graph& g) {
  std::vector<int> best;
  for (int s = 0; s < g.n(); ++s) {
    std::vector<int> dist(g.n(), -1), parent(g.n(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g.Adj(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (dist[v] == dist[u] && u < v) {
          const int len = 2 * dist[u] + 1;
          if (!best.empty() && len >= static_cast<int>(best.size())) continue;
          std::vector<int> left, right;
          for (int a = u; a != -1; a = parent[a]) left.push_back(a);
          for (int b = v; b != -1; b = parent[b]) right.push_back(b);
          // Both walks end at s; they must share nothing else.
          VertexSet seen;
          bool disjoint = true;
          for (int a : left) seen.Insert(a);
          for (size_t k = 0; k + 1 < right.size(); ++k) disjoint &= !seen.Contains(right[k]);
          if (!disjoint) continue;
          std::vector<int> cycle(left.rbegin(), left.rend());
          for (size_t k = 0; k + 1 < right.size(); ++k) cycle.push_back(right[k]);
          if (static_cast<int>(cycle.size()) == len) best = cycle;
        }
      }
    }
  }
  return best;
}

}  // namespace

Regularity ComponentwiseRegularity(Evaluator& ev, const std::vector<Graph>& parts,
                                   const PowerSpec& spec, const Deadline& dl) {
  if (spec.kind == PowerKind::kOrdinary) {
    throw InvalidArgument("componentwise evaluation covers plain and symbolic powers");
  }
  if (spec.kind == PowerKind::kPlain) {
    Regularity total = 0;
    for (const Graph& p : parts) total = total + ev.Reg(p, PowerSpec::Plain(), dl);
    return total;
  }
  std::vector<Regularity> acc;
  for (const Graph& p : parts) {
    if (p.NumEdges() == 0) continue;
    std::vector<Regularity> values(spec.r + 1);
    for (int s = 1; s <= spec.r; ++s) values[s] = ev.Reg(p, PowerSpec::Symbolic(s), dl);
    acc = acc.empty() ? values : FoldSymbolic(acc, values);
  }
  if (acc.empty()) return 0;
  return acc[spec.r];
}

bool NuCochordHypothesis(Evaluator& ev, const Graph& g, const std::optional<HTSpec>& spec,
                         int which) {
  try {
    RequireCase(ev, which, g, spec);
    return true;
  } catch (const Precondition&) {
    return false;
  }
}

namespace {

PowerSpec PowerFromJson(const Json& j) {
  const std::string kind = j.value("power", std::string("plain"));
  const int r = j.value("r", 1);
  if (kind == "plain") return PowerSpec::Plain();
  if (kind == "ordinary") return PowerSpec::Ordinary(r);
  if (kind == "symbolic") return PowerSpec::Symbolic(r);
  throw InvalidArgument("unknown power kind '" + kind + "'");
}

// Evaluates a GOLDEN instance's quantity.
int EvaluateGolden(Evaluator& ev, const Json& inst, const Deadline& dl) {
  const std::string q = inst.value("quantity", std::string("reg"));
  auto graph = [&]() {
    return inst.contains("ht") ? GraphOf(HTSpecFromJson(inst.at("ht"))) : GraphFromJson(inst.at("graph"));
  };
  if (q == "reg") return Val(ev.Reg(graph(), PowerFromJson(inst), dl));
  if (q == "nu") return ev.Nu(graph());
  if (q == "cochord") {
    const CochordResult cc = ev.Cochord(graph(), dl);
    if (!cc.exact) throw CapExceeded("cochord search inexact");
    return cc.upper;
  }
  if (q == "kappa") return Kappa(HTSpecFromJson(inst.at("ht")));
  if (q == "attachment-size") {
    const HTSpec spec = HTSpecFromJson(inst.at("ht"));
    const int v = inst.at("vertex").get<int>();
    for (const Attachment& a : spec.attachments)
      if (a.vertex == v) return a.star.VertexCount();
    throw InvalidArgument("no attachment at vertex " + std::to_string(v));
  }
  if (q == "reg-union") {
    std::vector<Graph> parts;
    for (const Json& c : inst.at("components")) {
      parts.push_back(c.contains("ht") ? GraphOf(HTSpecFromJson(c.at("ht"))) : GraphFromJson(c.at("graph")));
    }
    return Val(ComponentwiseRegularity(ev, parts, PowerFromJson(inst), dl));
  }
  throw InvalidArgument("unknown golden quantity '" + q + "'");
}

}  // namespace

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped";
  }
  return "?";
}

Json TheoremCheck::ToJson(bool with_timing) const {
  Json j;
  j["id"] = id;
  j["instance"] = instance;
  j["verdict"] = VerdictName(verdict);
  if (!reason.empty()) j["reason"] = reason;
  j["evidence"] = evidence;
  if (verdict == Verdict::kFail) j["counterexample"] = counterexample;
  if (cap_hit) j["cap_hit"] = true;
  if (with_timing) j["seconds"] = std::round(seconds * 1000) / 1000;
  return j;
}

TheoremCheck TheoremCheck::FromJson(const Json& j) {
  TheoremCheck c;
  c.id = j.at("id").get<std::string>();
  c.instance = j.value("instance", Json::object());
  const std::string v = j.at("verdict").get<std::string>();
  if (v == "pass") {
    c.verdict = Verdict::kPass;
  } else if (v == "fail") {
    c.verdict = Verdict::kFail;
  } else if (v == "skipped") {
    c.verdict = Verdict::kSkipped;
  } else {
    throw InvalidArgument("unknown verdict '" + v + "'");
  }
  c.reason = j.value("reason", std::string());
  c.evidence = j.value("evidence", Json::object());
  if (j.contains("counterexample")) c.counterexample = j.at("counterexample");
  c.cap_hit = j.value("cap_hit", false);
  c.seconds = j.value("seconds", 0.0);
  return c;
}

Regularity Evaluator::Reg(const Graph& g, const PowerSpec& spec, const Deadline& deadline) {
  PowerSpec s = spec;
  if (s.kind != PowerKind::kPlain && s.r == 1) s = PowerSpec::Plain();
  const std::string key = GraphKey(g) + "|" + s.ToString();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = reg_.find(key);
    if (it != reg_.end()) return it->second;
  }
  deadline.Check("regularity");
  const MonomialIdeal ideal = s.kind == PowerKind::kSymbolic ? Symbolic(g, s.r) : GraphIdeal(g, s);
  const Regularity value = RegularityQuotient(ideal, RegOptions(*this, deadline));
  std::lock_guard<std::mutex> lock(mu_);
  reg_.emplace(key, value);
  return value;
}

int Evaluator::Nu(const Graph& g) {
  const std::string key = GraphKey(g);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = nu_.find(key);
    if (it != nu_.end()) return it->second;
  }
  const int value = InducedMatchingNumber(g).count;
  std::lock_guard<std::mutex> lock(mu_);
  nu_.emplace(key, value);
  return value;
}

CochordResult Evaluator::Cochord(const Graph& g, const Deadline& deadline) {
  const std::string key = GraphKey(g);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cochord_.find(key);
    if (it != cochord_.end()) return it->second;
  }
  CochordOptions opts;
  opts.node_budget = options_.cochord_budget;
  opts.lower_bound_hint = Nu(g);
  opts.deadline = deadline;
  const CochordResult value = CochordalCoverNumber(g, opts);
  if (!value.exact) return value;  // may depend on the deadline
  std::lock_guard<std::mutex> lock(mu_);
  cochord_.emplace(key, value);
  return value;
}

const MonomialIdeal& Evaluator::Symbolic(const Graph& g, int r) {
  const std::string key = GraphKey(g) + "|" + std::to_string(r);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = symbolic_.find(key);
    if (it != symbolic_.end()) return it->second;
  }
  MonomialIdeal value = SymbolicPowerEdge(g, r);
  std::lock_guard<std::mutex> lock(mu_);
  return symbolic_.emplace(key, std::move(value)).first->second;
}

TheoremCheck CheckRegBounds(Evaluator& ev, const Graph& g, int r_max) {
  Json inst{{"graph", GraphToJson(g)}, {"r_max", r_max}};
  return Guarded("REG_BOUNDS", inst, ev, [&](TheoremCheck& c, const Deadline& dl) {
    Require(g.NumEdges() > 0, "graph has no edges");
    Require(r_max >= 1, "r_max >= 1");
    const int nu = ev.Nu(g);
    c.evidence["nu"] = nu;
    const CochordResult cc = ev.Cochord(g, dl);
    c.evidence["cochord"] = CochordJson(cc);
    Json regs = Json::array();
    for (int r = 1; r <= r_max; ++r) {
      const int reg = Val(ev.Reg(g, PowerSpec::Ordinary(r), dl));
      regs.push_back(reg);
      if (reg < 2 * r + nu - 2) Fail(c, r, "2r+nu-2 <= reg(S/I^r)", 2 * r + nu - 2, reg);
      // cochord <= upper, so exceeding the upper-based bound is a real violation.
      if (reg > 2 * r + cc.upper - 2) Fail(c, r, "reg(S/I^r) <= 2r+cochord-2", reg, 2 * r + cc.upper - 2);
    }
    c.evidence["reg"] = regs;
    if (!cc.exact) {
      Skip(c, "cochord inexact: " + std::to_string(cc.lower) + ".." + std::to_string(cc.upper));
      c.cap_hit = true;
    }
  });
}

TheoremCheck CheckLowerSymbolic(Evaluator& ev, const Graph& g, int r_max) {
  Json inst{{"graph", GraphToJson(g)}, {"r_max", r_max}};
  return Guarded("LOWER_SYMBOLIC", inst, ev, [&](TheoremCheck& c, const Deadline& dl) {
    Require(g.NumEdges() > 0, "graph has no edges");
    Require(r_max >= 1, "r_max >= 1");
    const int nu = ev.Nu(g);
    c.evidence["nu"] = nu;
    Json regs = Json::array();
    for (int r = 1; r <= r_max; ++r) {
      const int reg = Val(ev.Reg(g, PowerSpec::Symbolic(r), dl));
      regs.push_back(reg);
      if (reg < 2 * r + nu - 2) Fail(c, r, "2r+nu-2 <= reg(S/I^(r))", 2 * r + nu - 2, reg);
    }
    c.evidence["reg_symbolic"] = regs;
  });
}

TheoremCheck CheckLemmaTech(Evaluator& ev, const Graph& g, int x, VertexSet w, int r) {
  Json inst{{"graph", GraphToJson(g)}, {"x", x}, {"w", SetJson(w)}, {"r", r}};
  return Guarded("LEMMA_TECH", inst, ev, [&](TheoremCheck& c, const Deadline& dl) {
    Require(g.NumEdges() > 0, "graph has no edges");
    Require(r >= 2, "r >= 2");
    Require(x >= 0 && x < g.n(), "x is a vertex");
    Require(IsSimplicial(g, x), "x is simplicial");
    Require(w.Contains(x) && w.IsSubsetOf(Neighborhood(g, x, true)), "x in W within N[x]");
    const int lhs = Val(ev.Reg(g, PowerSpec::Symbolic(r), dl));
    Regularity best = ev.Reg(Isolate(g, VertexSet::Singleton(x)), PowerSpec::Symbolic(r), dl);
    Json terms = Json::array();
    terms.push_back({{"term", "G\\x"}, {"value", best.ToJson()}});
    const VertexSet rest = w - VertexSet::Singleton(x);
    // Every B with x in B within W; A = W \ B.
    for (uint32_t sub = rest.bits();; sub = (sub - 1) & rest.bits()) {
      const VertexSet b = VertexSet(sub) | VertexSet::Singleton(x);
      const VertexSet a = w - b;
      const MonomialIdeal colon =
          Colon(ev.Symbolic(Isolate(g, a), r), SquarefreeOf(g.n(), b));
      const Regularity t = RegularityQuotient(colon, RegOptions(ev, dl)) + Regularity(b.Size());
      terms.push_back({{"A", SetJson(a)}, {"B", SetJson(b)}, {"value", t.ToJson()}});
      best = std::max(best, t);
      if (sub == 0) break;
    }
    c.evidence["lhs"] = lhs;
    c.evidence["terms"] = terms;
    c.evidence["max"] = best.ToJson();
    if (Regularity(lhs) > best) Fail(c, r, "reg(S/I(G)^(r)) <= max of the lemma terms", lhs, best.ToJson());
  });
}

TheoremCheck CheckPropRegSum(Evaluator& ev, const Graph& g1, const Graph& g2, int r_max) {
  Json inst{{"graph1", GraphToJson(g1)}, {"graph2", GraphToJson(g2)}, {"r_max", r_max}};
  return Guarded("PROP_REGSUM", inst, ev, [&](TheoremCheck& c, const Deadline& dl) {
    Require(g1.NumEdges() > 0 && g2.NumEdges() > 0, "both parts have edges");
    Require(r_max >= 1, "r_max >= 1");
    std::vector<Regularity> a(r_max + 1), b(r_max + 1);
    int rho1 = INT32_MIN, rho2 = INT32_MIN;
    for (int s = 1; s <= r_max; ++s) {
      a[s] = ev.Reg(g1, PowerSpec::Symbolic(s), dl);
      b[s] = ev.Reg(g2, PowerSpec::Symbolic(s), dl);
      rho1 = std::max(rho1, Val(a[s]) - 2 * s + 2);
      rho2 = std::max(rho2, Val(b[s]) - 2 * s + 2);
    }
    const std::vector<Regularity> fold = FoldSymbolic(a, b);
    Json ja = Json::array(), jb = Json::array(), jf = Json::array(), jd = Json::array();
    for (int s = 1; s <= r_max; ++s) {
      ja.push_back(Val(a[s]));
      jb.push_back(Val(b[s]));
      jf.push_back(Val(fold[s]));
    }
    c.evidence["reg1"] = ja;
    c.evidence["reg2"] = jb;
    c.evidence["rho1"] = rho1;
    c.evidence["rho2"] = rho2;
    c.evidence["fold"] = jf;
    const int n = g1.n() + g2.n();
    const bool direct = n <= kMaxVertices &&
                        std::pow(r_max + 1.0, n) <= static_cast<double>(ev.options().direct_box_cap);
    Graph both;
    if (direct) both = DisjointUnion(g1, g2);
    for (int s = 1; s <= r_max; ++s) {
      int value = Val(fold[s]);
      if (direct) {
        const int d = Val(ev.Reg(both, PowerSpec::Symbolic(s), dl));
        jd.push_back(d);
        if (d != value) Fail(c, s, "direct reg(S/I(G1 u G2)^(s)) = fold", d, value);
        value = d;
      }
      if (value > 2 * s + rho1 + rho2 - 2) {
        Fail(c, s, "reg(S/I(G)^(s)) <= 2s+rho1+rho2-2", value, 2 * s + rho1 + rho2 - 2);
      }
    }
    c.evidence["direct"] = direct ? jd : Json("not computed: box cap");
  });
}

TheoremCheck CheckThmBipartiteHT(Evaluator& ev, const HTSpec& spec, int r_max) {
  Json inst{{"ht", HTSpecToJson(spec)}, {"r_max", r_max}};
  return Guarded("THM_BIPARTITE_HT", inst, ev, [&](TheoremCheck& c, const Deadline& dl) {
    Require(IsBipartite(spec.base).bipartite, "base is bipartite");
    const Graph g = GraphOf(spec);
    Require(g.NumEdges() > 0, "graph has no edges");
    const int reg1 = Val(ev.Reg(g, PowerSpec::Plain(), dl));
    c.evidence["reg"] = reg1;
    c.evidence["kappa"] = Kappa(spec);
    Json sym = Json::array(), tight = Json::array();
    for (int r = 1; r <= r_max; ++r) {
      const int v = Val(ev.Reg(g, PowerSpec::Symbolic(r), dl));
      sym.push_back(v);
      tight.push_back(v == 2 * r + reg1 - 2);
      if (v > 2 * r + reg1 - 2) Fail(c, r, "reg(S/I^(r)) <= 2r+reg(S/I)-2", v, 2 * r + reg1 - 2);
    }
    c.evidence["reg_symbolic"] = sym;
    c.evidence["tight"] = tight;
  });
}

TheoremCheck CheckCorCochordHT(Evaluator& ev, const HTSpec& spec, int r_max) {
  Json inst{{"ht", HTSpecToJson(spec)}, {"r_max", r_max}};
  return Guarded("COR_COCHORD_HT", inst, ev, [&](TheoremCheck& c, const Deadline& dl) {
    Require(IsBipartite(spec.base).bipartite, "base is bipartite");
    const Graph g = GraphOf(spec);
    Require(g.NumEdges() > 0, "graph has no edges");
    const CochordResult cc = ev.Cochord(g, dl);
    c.evidence["cochord"] = CochordJson(cc);
    Json sym = Json::array();
    for (int r = 1; r <= r_max; ++r) {
      const int v = Val(ev.Reg(g, PowerSpec::Symbolic(r), dl));
      sym.push_back(v);
      if (v > 2 * r + cc.upper - 2) Fail(c, r, "reg(S/I^(r)) <= 2r+cochord-2", v, 2 * r + cc.upper - 2);
    }
    c.evidence["reg_symbolic"] = sym;
    if (!cc.exact) {
      Skip(c, "cochord inexact");
      c.cap_hit = true;
    }
  });
}

TheoremCheck CheckPropNuCochord(Evaluator& ev, const Graph& g, const std::optional<HTSpec>& spec,
                                int which) {
  Json inst = InstanceGraph(g, spec);
  inst["case"] = which;
  return Guarded("PROP_NU_COCHORD", inst, ev, [&](TheoremCheck& c, const Deadline& dl) {
    Require(g.NumEdges() > 0, "graph has no edges");
    RequireCase(ev, which, g, spec);
    const int nu = ev.Nu(g);
    const CochordResult cc = ev.Cochord(g, dl);
    const int mat = MatchingNumber(g).count;
    c.evidence["nu"] = nu;
    c.evidence["cochord"] = CochordJson(cc);
    c.evidence["mat"] = mat;
    if (cc.lower > mat) Fail(c, 0, "cochord <= mat", cc.lower, mat);
    if (cc.upper < nu) Fail(c, 0, "nu <= cochord", nu, cc.upper);
    if (cc.exact && cc.upper != nu) Fail(c, 0, "nu = cochord", nu, cc.upper);
    if (!cc.exact && cc.lower > nu) Fail(c, 0, "nu = cochord", nu, Json{cc.lower, cc.upper});
    if (which == 3) {
      try {
        const HTCover built = ConstructCochordalCoverHT(*spec);
        std::string why;
        const bool valid = ValidateCoChordalCover(g, built.cover, &why);
        const int size = static_cast<int>(built.cover.parts.size());
        c.evidence["construction"] = {{"case", CoverCaseName(built.which)},
                                      {"parts", size},
                                      {"valid", valid},
                                      {"ambiguous_edges", built.ambiguous_edges.size()}};
        if (!valid) Fail(c, 0, "constructed cover is co-chordal and covers E(G)", why, "valid");
        if (size != nu) Fail(c, 0, "constructed cover size = nu", size, nu);
      } catch (const InternalError& e) {
        Fail(c, 0, "constructed cover is co-chordal and covers E(G)", e.what(), "valid");
      }
    }
    if (!cc.exact) {
      Skip(c, "cochord inexact");
      c.cap_hit = true;
    }
  });
}

TheoremCheck CheckCorCamWal(Evaluator& ev, const Graph& g, const std::optional<HTSpec>& spec,
                            int which, int r_max) {
  Json inst = InstanceGraph(g, spec);
  inst["case"] = which;
  inst["r_max"] = r_max;
  return Guarded("COR_CAMWAL", inst, ev, [&](TheoremCheck& c, const Deadline& dl) {
    Require(g.NumEdges() > 0, "graph has no edges");
    RequireCase(ev, which, g, spec);
    const int nu = ev.Nu(g);
    c.evidence["nu"] = nu;
    Json ord = Json::array(), sym = Json::array();
    for (int r = 1; r <= r_max; ++r) {
      const int o = Val(ev.Reg(g, PowerSpec::Ordinary(r), dl));
      const int s = Val(ev.Reg(g, PowerSpec::Symbolic(r), dl));
      ord.push_back(o);
      sym.push_back(s);
      if (o != 2 * r + nu - 2) Fail(c, r, "reg(S/I^r) = 2r+nu-2", o, 2 * r + nu - 2);
      if (s != 2 * r + nu - 2) Fail(c, r, "reg(S/I^(r)) = 2r+nu-2", s, 2 * r + nu - 2);
    }
    c.evidence["reg_ordinary"] = ord;
    c.evidence["reg_symbolic"] = sym;
  });
}

TheoremCheck CheckThmUnicyclicReg(Evaluator& ev, const HTSpec& spec) {
  Json inst{{"ht", HTSpecToJson(spec)}};
  return Guarded("THM_UNICYCLIC_REG", inst, ev, [&](TheoremCheck& c, const Deadline& dl) {
    Require(IsConnected(spec.base) && HasExactlyOneCycle(spec.base), "base is unicyclic");
    const Graph g = GraphOf(spec);
    const UnicyclicDecomposition d = DecomposeUnicyclic(spec);
    const int nu = ev.Nu(g);
    const int reg = Val(ev.Reg(g, PowerSpec::Plain(), dl));
    const int n = static_cast<int>(d.cycle.size());
    const int nu_rest = ev.Nu(Isolate(g, d.gamma));
    c.evidence["decomposition"] = UnicyclicDecompositionToJson(d);
    c.evidence["nu"] = nu;
    c.evidence["reg"] = reg;
    c.evidence["cycle_length"] = n;
    c.evidence["nu_without_gamma"] = nu_rest;
    if (reg < nu) Fail(c, 0, "nu <= reg(S/I)", nu, reg);
    if (reg > nu + 1) Fail(c, 0, "reg(S/I) <= nu+1", reg, nu + 1);
    std::string which = "none";
    if (n % 3 != 2) {
      which = "1";
    } else if (nu_rest < nu) {
      which = "2";
    }
    c.evidence["case"] = which;
    if (which != "none" && reg != nu) Fail(c, 0, "reg(S/I) = nu in case " + which, reg, nu);
  });
}

namespace {

TheoremCheck UnicyclicUpper(Evaluator& ev, const char* id, const HTSpec& spec, int r_max,
                            PowerKind kind) {
  Json inst{{"ht", HTSpecToJson(spec)}, {"r_max", r_max}};
  return Guarded(id, inst, ev, [&](TheoremCheck& c, const Deadline& dl) {
    Require(IsConnected(spec.base) && HasExactlyOneCycle(spec.base), "base is unicyclic");
    const Graph g = GraphOf(spec);
    const int reg1 = Val(ev.Reg(g, PowerSpec::Plain(), dl));
    c.evidence["reg"] = reg1;
    Json vals = Json::array();
    const std::string name = kind == PowerKind::kSymbolic ? "reg(S/I^(r))" : "reg(S/I^r)";
    for (int r = 1; r <= r_max; ++r) {
      const int v = Val(ev.Reg(g, {kind, r}, dl));
      vals.push_back(v);
      if (v > 2 * r + reg1 - 2) Fail(c, r, name + " <= 2r+reg(S/I)-2", v, 2 * r + reg1 - 2);
    }
    c.evidence[kind == PowerKind::kSymbolic ? "reg_symbolic" : "reg_ordinary"] = vals;
  });
}

}  // namespace

TheoremCheck CheckPropOrdUni(Evaluator& ev, const HTSpec& spec, int r_max) {
  return UnicyclicUpper(ev, "PROP_ORD_UNI", spec, r_max, PowerKind::kOrdinary);
}

TheoremCheck CheckPropSymUni(Evaluator& ev, const HTSpec& spec, int r_max) {
  return UnicyclicUpper(ev, "PROP_SYM_UNI", spec, r_max, PowerKind::kSymbolic);
}

TheoremCheck CheckMainUnicyclic(Evaluator& ev, const HTSpec& spec, int r_max, bool allow_empty_t) {
  Json inst{{"ht", HTSpecToJson(spec)}, {"r_max", r_max}, {"allow_empty_t", allow_empty_t}};
  return Guarded("THM_MAIN_UNI", inst, ev, [&](TheoremCheck& c, const Deadline& dl) {
    Require(IsConnected(spec.base) && HasExactlyOneCycle(spec.base), "base is unicyclic");
    Require(allow_empty_t || !spec.T().Empty(), "T is empty");
    const Graph g = GraphOf(spec);
    const int reg1 = Val(ev.Reg(g, PowerSpec::Plain(), dl));
    c.evidence["reg"] = reg1;
    Json ord = Json::array(), sym = Json::array();
    std::string missing;
    for (int r = 1; r <= r_max; ++r) {
      const int target = 2 * r + reg1 - 2;
      for (PowerKind kind : {PowerKind::kOrdinary, PowerKind::kSymbolic}) {
        const bool symbolic = kind == PowerKind::kSymbolic;
        const std::string name = symbolic ? "reg(S/I^(r))" : "reg(S/I^r)";
        Json& out = symbolic ? sym : ord;
        try {
          const int v = Val(ev.Reg(g, {kind, r}, dl));
          out.push_back(v);
          if (v > target) Fail(c, r, name + " <= 2r+reg(S/I)-2", v, target);
          if (v != target) Fail(c, r, name + " = 2r+reg(S/I)-2", v, target);
        } catch (const CapExceeded& e) {
          out.push_back(nullptr);
          c.cap_hit = true;
          if (missing.empty()) missing = name + " at r = " + std::to_string(r) + ": " + e.what();
        }
      }
    }
    c.evidence["reg_ordinary"] = ord;
    c.evidence["reg_symbolic"] = sym;
    if (!missing.empty()) Skip(c, "cap: " + missing);
  });
}

TheoremCheck CheckBipartitePowers(Evaluator& ev, const Graph& g, int r_max) {
  Json inst{{"graph", GraphToJson(g)}, {"r_max", r_max}};
  return Guarded("BIPARTITE_POWERS", inst, ev, [&](TheoremCheck& c, const Deadline& dl) {
    Require(g.NumEdges() > 0, "graph has no edges");
    Require(r_max >= 1, "r_max >= 1");
    const bool bipartite = IsBipartite(g).bipartite;
    const int girth = OddGirth(g);
    c.evidence["bipartite"] = bipartite;
    if (!bipartite) c.evidence["odd_girth"] = girth;
    const MonomialIdeal edge = EdgeIdeal(g);
    const std::vector<int> odd = ShortestOddCycle(g);
    Json equal = Json::array();
    for (int r = 1; r <= r_max; ++r) {
      dl.Check("bipartite powers");
      const MonomialIdeal ordinary = Power(edge, r);
      const MonomialIdeal& symbolic = ev.Symbolic(g, r);
      const bool same = ordinary == symbolic;
      equal.push_back(same);
      if (same) continue;
      // I^r is always inside I^(r); a generator outside I^r is a witness.
      std::optional<Monomial> witness;
      if (!odd.empty() && 2 * r - 1 == static_cast<int>(odd.size())) {
        const Monomial m = SquarefreeOf(g.n(), VertexSet::FromList(odd));
        if (SymbolicMembership(g, m, r) && !ordinary.Contains(m)) witness = m;
      }
      if (!witness) {
        for (const Monomial& m : symbolic.gens()) {
          if (!ordinary.Contains(m)) {
            witness = m;
            break;
          }
        }
      }
      if (!witness) throw InternalError("I^r differs from I^(r) without a witness");
      const bool in_symbolic = SymbolicMembership(g, *witness, r);
      const bool in_ordinary = ordinary.Contains(*witness);
      if (!c.evidence.contains("witness")) {
        c.evidence["witness"] = {{"r", r},
                                 {"monomial", witness->ToString()},
                                 {"in_symbolic", in_symbolic},
                                 {"in_ordinary", in_ordinary}};
      }
      if (!in_symbolic || in_ordinary) throw InternalError("witness fails membership recheck");
      if (bipartite) Fail(c, r, "bipartite implies I^r = I^(r)", witness->ToString(), "no witness");
      break;
    }
    c.evidence["equal"] = equal;
    if (!bipartite && !c.evidence.contains("witness")) {
      Skip(c, "no witness for r <= " + std::to_string(r_max) + "; odd girth " +
                  std::to_string(girth) + " first separates at r = " + std::to_string((girth + 1) / 2));
    }
  });
}

TheoremCheck CheckColonLemma(Evaluator& ev, const Graph& g, int x, VertexSet a, VertexSet b, int r) {
  Json inst{{"graph", GraphToJson(g)}, {"x", x}, {"a", SetJson(a)}, {"b", SetJson(b)}, {"r", r}};
  return Guarded("COLON_LEMMA", inst, ev, [&](TheoremCheck& c, const Deadline& dl) {
    Require(r >= 1, "r >= 1");
    Require(x >= 0 && x < g.n(), "x is a vertex");
    Require(b.Contains(x) && !a.Intersects(b), "x in B, A and B disjoint");
    Require(a.IsSubsetOf(g.Vertices()) && b.IsSubsetOf(g.Vertices()), "A, B within V(G)");
    const Graph ga = Isolate(g, a);
    Require(IsSimplicial(ga, x), "x simplicial in G\\A");
    Require(Neighborhood(ga, x, true) == b, "N_{G\\A}[x] = B");
    dl.Check("colon");
    const MonomialIdeal lhs = Colon(ev.Symbolic(ga, r), SquarefreeOf(g.n(), b));
    const int k = b.Size();
    const MonomialIdeal rhs = k >= r + 1 ? MonomialIdeal::Unit(g.n()) : ev.Symbolic(ga, r - k + 1);
    c.evidence["colon"] = lhs.ToString();
    c.evidence["expected"] = k >= r + 1 ? std::string("unit ideal") : "I(G\\A)^(" + std::to_string(r - k + 1) + ")";
    c.evidence["generators"] = lhs.NumGens();
    if (!(lhs == rhs)) Fail(c, r, "(I(G\\A)^(r) : x_B) = I(G\\A)^(r-|B|+1)", lhs.ToString(), rhs.ToString());
  });
}

TheoremCheck GoldenRecord(const std::string& name, const Json& instance, int expected,
                          std::optional<int> got, const std::string& skip_reason) {
  TheoremCheck c;
  c.id = "GOLDEN";
  c.instance = instance;
  c.instance["name"] = name;
  c.instance["expected"] = expected;
  c.evidence["expected"] = expected;
  if (!got) {
    c.verdict = Verdict::kSkipped;
    c.reason = skip_reason.empty() ? "not computed" : skip_reason;
    return c;
  }
  c.evidence["computed"] = *got;
  c.verdict = Verdict::kPass;
  if (*got != expected) Fail(c, instance.value("r", 0), name, *got, expected);
  return c;
}

TheoremCheck RunCheckFromJson(Evaluator& ev, const std::string& id, const Json& j) {
  auto graph = [&] { return GraphFromJson(j.at("graph")); };
  auto ht = [&] { return HTSpecFromJson(j.at("ht")); };
  auto opt_ht = [&]() -> std::optional<HTSpec> {
    if (j.contains("ht")) return HTSpecFromJson(j.at("ht"));
    return std::nullopt;
  };
  auto rmax = [&] { return j.at("r_max").get<int>(); };
  if (id == "REG_BOUNDS") return CheckRegBounds(ev, graph(), rmax());
  if (id == "LOWER_SYMBOLIC") return CheckLowerSymbolic(ev, graph(), rmax());
  if (id == "LEMMA_TECH") {
    return CheckLemmaTech(ev, graph(), j.at("x").get<int>(), SetFromJson(j.at("w")), j.at("r").get<int>());
  }
  if (id == "PROP_REGSUM") {
    return CheckPropRegSum(ev, GraphFromJson(j.at("graph1")), GraphFromJson(j.at("graph2")), rmax());
  }
  if (id == "THM_BIPARTITE_HT") return CheckThmBipartiteHT(ev, ht(), rmax());
  if (id == "COR_COCHORD_HT") return CheckCorCochordHT(ev, ht(), rmax());
  if (id == "PROP_NU_COCHORD") {
    const auto s = opt_ht();
    return CheckPropNuCochord(ev, s ? GraphOf(*s) : graph(), s, j.at("case").get<int>());
  }
  if (id == "COR_CAMWAL") {
    const auto s = opt_ht();
    return CheckCorCamWal(ev, s ? GraphOf(*s) : graph(), s, j.at("case").get<int>(), rmax());
  }
  if (id == "THM_UNICYCLIC_REG") return CheckThmUnicyclicReg(ev, ht());
  if (id == "PROP_ORD_UNI") return CheckPropOrdUni(ev, ht(), rmax());
  if (id == "PROP_SYM_UNI") return CheckPropSymUni(ev, ht(), rmax());
  if (id == "THM_MAIN_UNI") return CheckMainUnicyclic(ev, ht(), rmax(), j.value("allow_empty_t", false));
  if (id == "BIPARTITE_POWERS") return CheckBipartitePowers(ev, graph(), rmax());
  if (id == "COLON_LEMMA") {
    return CheckColonLemma(ev, graph(), j.at("x").get<int>(), SetFromJson(j.at("a")),
                           SetFromJson(j.at("b")), j.at("r").get<int>());
  }
  if (id == "GOLDEN") {
    Json stripped = j;
    const std::string name = j.value("name", std::string("golden"));
    const int expected = j.at("expected").get<int>();
    stripped.erase("name");
    stripped.erase("expected");
    const Deadline dl(ev.options().timeout);
    try {
      return GoldenRecord(name, stripped, expected, EvaluateGolden(ev, stripped, dl));
    } catch (const CapExceeded& e) {
      TheoremCheck c = GoldenRecord(name, stripped, expected, std::nullopt, std::string("cap: ") + e.what());
      c.cap_hit = true;
      return c;
    } catch (const DeadlineExceeded& e) {
      TheoremCheck c = GoldenRecord(name, stripped, expected, std::nullopt, std::string("timeout: ") + e.what());
      c.cap_hit = true;
      return c;
    }
  }
  throw InvalidArgument("unknown check id '" + id + "'");
}

bool ReverifyCounterexample(const Json& bundle, const CheckOptions& options, std::string* why) {
  auto say = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  try {
    // Round-trip through text so nothing survives from the original objects.
    const Json copy = Json::parse(bundle.dump());
    if (copy.contains("graph")) GraphFromJson(copy.at("graph"));
    Evaluator fresh(options);
    const TheoremCheck again =
        RunCheckFromJson(fresh, copy.at("check").get<std::string>(), copy.at("instance"));
    if (again.verdict != Verdict::kFail) return say("rerun verdict is " + std::string(VerdictName(again.verdict)));
    const Json& cx = again.counterexample;
    for (const char* key : {"relation", "lhs", "rhs", "r"}) {
      if (cx.value(key, Json()) != copy.value(key, Json())) return say(std::string("rerun differs in ") + key);
    }
    return true;
  } catch (const std::exception& e) {
    return say(e.what());
  }
}

int OddGirth(const Graph& g) { return static_cast<int>(ShortestOddCycle(g).size()); }

}  // namespace eil
