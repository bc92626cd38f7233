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

#include "eil/report.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>
#include <utility>

#include "eil/error.h"
#include "parallel.h"

namespace eil {
namespace {

using Task = std::function<TheoremCheck(Evaluator&)>;

struct SuiteDef {
  std::string description;
  int default_r_max;
  std::function<std::vector<CorpusSpec>()> corpora;
  // Appends the checks for one instance.
  std::function<void(const CorpusInstance&, int r_max, std::vector<Task>*)> expand;
  // Extra checks independent of the corpus, or over the whole corpus.
  std::function<void(const std::vector<CorpusInstance>&, int r_max, std::vector<Task>*)> global;
};

CorpusSpec Exhaustive(int max_vertices) {
  CorpusSpec s;
  s.kind = CorpusKind::kAllConnectedLe;
  s.max_vertices = max_vertices;
  return s;
}

CorpusSpec RandomHTSpec(uint64_t seed, int count, BaseFamily base, int total_max) {
  CorpusSpec s;
  s.kind = base == BaseFamily::kUnicyclic ? CorpusKind::kRandomUnicyclicHT : CorpusKind::kRandomHT;
  s.seed = seed;
  s.count = count;
  s.base = base;
  s.min_vertices = base == BaseFamily::kUnicyclic ? 3 : 2;
  s.max_vertices = 8;
  s.total_max = total_max;
  return s;
}

CorpusSpec NamedSpec(const std::string& name) {
  CorpusSpec s;
  s.kind = CorpusKind::kNamed;
  s.name = name;
  return s;
}

bool HasEdges(const CorpusInstance& inst) { return inst.graph.NumEdges() > 0; }

// Simplicial vertices with at least one neighbor.
std::vector<int> SimplicialVertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v)
    if (g.Degree(v) > 0 && IsSimplicial(g, v)) out.push_back(v);
  return out;
}

bool IsUnicyclicGraph(const Graph& g) { return IsConnected(g) && g.NumEdges() == g.n(); }

Task Golden(std::string name, Json instance, int expected) {
  instance["name"] = std::move(name);
  instance["expected"] = expected;
  return [instance](Evaluator& ev) { return RunCheckFromJson(ev, "GOLDEN", instance); };
}

Json GraphArg(const Graph& g) { return Json{{"graph", GraphToJson(g)}}; }

Json HTArg(const HTSpec& s) { return Json{{"ht", HTSpecToJson(s)}}; }

Json WithPower(Json j, const std::string& kind, int r) {
  j["power"] = kind;
  j["r"] = r;
  return j;
}

HTSpec Bare(const Graph& g) {
  HTSpec s;
  s.base = g;
  return s;
}

HTSpec WithCliques(const Graph& base, std::vector<std::pair<int, std::vector<int>>> atts) {
  HTSpec s;
  s.base = base;
  for (auto& [v, sizes] : atts) s.attachments.push_back({v, StarOfCliquesSpec{sizes}});
  s.Validate();
  return s;
}

void GoldenTasks(int r_max, std::vector<Task>* tasks) {
  const Graph c8 = Graph::Cycle(8), c10 = Graph::Cycle(10);
  const HTSpec c10k3 = WithCliques(c10, {{0, {3}}});
  tasks->push_back(Golden("reg(S/I(C8)) = 3", WithPower(GraphArg(c8), "plain", 1), 3));
  tasks->push_back(Golden("reg(S/I(C10)) = 3", WithPower(GraphArg(c10), "plain", 1), 3));
  Json k = HTArg(c10k3);
  k["quantity"] = "nu";
  tasks->push_back(Golden("nu(C10+K3) = 4", k, 4));
  k["quantity"] = "cochord";
  tasks->push_back(Golden("cochord(C10+K3) = 4", k, 4));
  tasks->push_back(Golden("reg(S/I(C10+K3)) = 4", WithPower(HTArg(c10k3), "plain", 1), 4));
  for (int r = 2; r <= std::max(3, r_max); ++r) {
    tasks->push_back(Golden("reg(S/I(C8)^(r)) = 2r", WithPower(GraphArg(c8), "symbolic", r), 2 * r));
    tasks->push_back(
        Golden("reg(S/I(C10)^(r)) = 2r+1", WithPower(GraphArg(c10), "symbolic", r), 2 * r + 1));
    tasks->push_back(Golden("reg(S/I(C10+K3)^(r)) = 2r+2", WithPower(HTArg(c10k3), "symbolic", r),
                            2 * r + 2));
  }
  Json parts = Json::array();
  for (const CorpusInstance& inst : GenerateCorpus(NamedSpec("union-example"))) {
    parts.push_back(CorpusInstanceToJson(inst));
  }
  Json u{{"quantity", "reg-union"}, {"components", parts}};
  tasks->push_back(Golden("reg(S/I(G)) = 3+3+3+4 for G = C8 u C8 u C10 u C10+K3", WithPower(u, "plain", 1), 13));
  for (int r = 2; r <= std::max(3, r_max); ++r) {
    tasks->push_back(Golden("reg(S/I(G)^(r)) = 2r+9 for G = C8 u C8 u C10 u C10+K3",
                            WithPower(u, "symbolic", r), 2 * r + 9));
  }
  const HTSpec figure = GenerateCorpus(NamedSpec("c5-attachments")).front().ht.value();
  Json f = HTArg(figure);
  f["quantity"] = "kappa";
  tasks->push_back(Golden("kappa(c5-attachments) = 12", f, 12));
  f["quantity"] = "attachment-size";
  f["vertex"] = 2;
  tasks->push_back(Golden("|V(K(x3))| = 7", f, 7));
  f["vertex"] = 4;
  tasks->push_back(Golden("|V(K(x5))| = 5", f, 5));
  // Small closed forms.
  for (int r = 1; r <= 3; ++r) {
    tasks->push_back(Golden("reg(S/I(K2)^r) = 2r-1",
                            WithPower(GraphArg(Graph::Complete(2)), "ordinary", r), 2 * r - 1));
  }
  tasks->push_back(Golden("reg(S/I(C5)) = 2", WithPower(GraphArg(Graph::Cycle(5)), "plain", 1), 2));
  tasks->push_back(Golden("reg(S/I(C6)) = 2", WithPower(GraphArg(Graph::Cycle(6)), "plain", 1), 2));
}

void SpecExampleTasks(std::vector<Task>* tasks) {
  auto add = [&](std::function<TheoremCheck(Evaluator&)> t) { tasks->push_back(std::move(t)); };
  const Graph k2 = Graph::Complete(2), c3 = Graph::Cycle(3), c4 = Graph::Cycle(4),
              c5 = Graph::Cycle(5), c6 = Graph::Cycle(6);
  const HTSpec c10k3 = WithCliques(Graph::Cycle(10), {{0, {3}}});
  const HTSpec c5k3 = WithCliques(c5, {{0, {3}}});
  const HTSpec c3k2 = WithCliques(c3, {{0, {2}}});
  const HTSpec k2k3 = WithCliques(k2, {{0, {3}}});
  const HTSpec c4cover = WithCliques(c4, {{0, {2}}, {2, {2}}});
  const Graph two_k2 = Graph::Build(4, {{0, 1}, {2, 3}});
  add([=](Evaluator& ev) { return CheckRegBounds(ev, c5, 2); });
  add([=](Evaluator& ev) { return CheckRegBounds(ev, k2, 3); });
  add([=](Evaluator& ev) { return CheckRegBounds(ev, AttachHT(c10k3).graph, 2); });
  add([=](Evaluator& ev) { return CheckLowerSymbolic(ev, c3, 2); });
  add([=](Evaluator& ev) { return CheckLowerSymbolic(ev, c5, 2); });
  add([=](Evaluator& ev) { return CheckLowerSymbolic(ev, c4, 3); });
  add([=](Evaluator& ev) { return CheckThmBipartiteHT(ev, c10k3, 2); });
  add([=](Evaluator& ev) { return CheckThmBipartiteHT(ev, Bare(c4), 3); });
  add([=](Evaluator& ev) { return CheckCorCochordHT(ev, c10k3, 2); });
  add([=](Evaluator& ev) { return CheckPropNuCochord(ev, AttachHT(k2k3).graph, k2k3, 1); });
  add([=](Evaluator& ev) { return CheckPropNuCochord(ev, AttachHT(k2k3).graph, k2k3, 3); });
  add([=](Evaluator& ev) { return CheckPropNuCochord(ev, two_k2, std::nullopt, 2); });
  add([=](Evaluator& ev) { return CheckCorCamWal(ev, two_k2, std::nullopt, 2, 2); });
  add([=](Evaluator& ev) { return CheckCorCamWal(ev, AttachHT(c4cover).graph, c4cover, 3, 2); });
  add([=](Evaluator& ev) { return CheckCorCamWal(ev, Graph::Star(3), std::nullopt, 2, 3); });
  add([=](Evaluator& ev) { return CheckThmUnicyclicReg(ev, c5k3); });
  add([=](Evaluator& ev) { return CheckThmUnicyclicReg(ev, Bare(c6)); });
  add([=](Evaluator& ev) { return CheckThmUnicyclicReg(ev, Bare(c5)); });
  add([=](Evaluator& ev) { return CheckMainUnicyclic(ev, c3k2, 2); });
  add([=](Evaluator& ev) { return CheckMainUnicyclic(ev, c5k3, 2); });
  add([=](Evaluator& ev) { return CheckMainUnicyclic(ev, Bare(c4), 2); });
  add([=](Evaluator& ev) { return CheckBipartitePowers(ev, c3, 2); });
  add([=](Evaluator& ev) { return CheckBipartitePowers(ev, c4, 3); });
  add([=](Evaluator& ev) { return CheckBipartitePowers(ev, c5, 3); });
  add([=](Evaluator& ev) {
    return CheckColonLemma(ev, Graph::Complete(3), 0, {}, {0, 1, 2}, 2);
  });
  add([=](Evaluator& ev) { return CheckColonLemma(ev, Graph::Path(3), 0, {}, {0, 1}, 2); });
  add([=](Evaluator& ev) { return CheckColonLemma(ev, k2, 0, {}, {0, 1}, 3); });
  add([=](Evaluator& ev) { return CheckPropRegSum(ev, Graph::Cycle(8), k2, 2); });
  add([=](Evaluator& ev) { return CheckPropRegSum(ev, c5, k2, 3); });
}

// Colon and lemma checks for every simplicial vertex x and A within N(x).
void ColonTasks(const CorpusInstance& inst, int r_max, std::vector<Task>* tasks) {
  const Graph g = inst.graph;
  for (int x : SimplicialVertices(g)) {
    const VertexSet open = g.Adj(x);
    for (uint32_t sub = open.bits();; sub = (sub - 1) & open.bits()) {
      const VertexSet a(sub);
      const VertexSet b = Neighborhood(g, x, true) - a;
      for (int r = 1; r <= r_max; ++r) {
        tasks->push_back([=](Evaluator& ev) { return CheckColonLemma(ev, g, x, a, b, r); });
      }
      if (sub == 0) break;
    }
    for (int r = 2; r <= r_max; ++r) {
      const VertexSet w = Neighborhood(g, x, true);
      tasks->push_back([=](Evaluator& ev) { return CheckLemmaTech(ev, g, x, w, r); });
    }
  }
}

const std::map<std::string, SuiteDef>& Suites() {
  static const std::map<std::string, SuiteDef> suites = [] {
    std::map<std::string, SuiteDef> m;
    m["goldens"] = {
        "reference values and worked examples",
        3,
        [] { return std::vector<CorpusSpec>{}; },
        nullptr,
        [](const std::vector<CorpusInstance>&, int r_max, std::vector<Task>* t) {
          GoldenTasks(r_max, t);
          SpecExampleTasks(t);
        }};
    m["small-exhaustive"] = {
        "induced matching and cochordal bounds, symbolic lower bound and the bipartite dichotomy on small connected graphs",
        2,
        [] { return std::vector<CorpusSpec>{Exhaustive(6)}; },
        [](const CorpusInstance& inst, int r_max, std::vector<Task>* t) {
          if (!HasEdges(inst)) return;
          const Graph g = inst.graph;
          t->push_back([=](Evaluator& ev) { return CheckRegBounds(ev, g, r_max); });
          t->push_back([=](Evaluator& ev) { return CheckLowerSymbolic(ev, g, r_max); });
          t->push_back([=](Evaluator& ev) { return CheckBipartitePowers(ev, g, r_max); });
        },
        nullptr};
    m["bounds"] = {
        "2r+nu-2 <= reg(S/I^r) <= 2r+cochord-2 and 2r+nu-2 <= reg(S/I^(r))",
        2,
        [] { return std::vector<CorpusSpec>{Exhaustive(7)}; },
        [](const CorpusInstance& inst, int r_max, std::vector<Task>* t) {
          if (!HasEdges(inst)) return;
          const Graph g = inst.graph;
          t->push_back([=](Evaluator& ev) { return CheckRegBounds(ev, g, r_max); });
          t->push_back([=](Evaluator& ev) { return CheckLowerSymbolic(ev, g, r_max); });
        },
        nullptr};
    m["bipartite-powers"] = {
        "bipartite iff I^r = I^(r), with witnesses",
        3,
        [] { return std::vector<CorpusSpec>{Exhaustive(7)}; },
        [](const CorpusInstance& inst, int r_max, std::vector<Task>* t) {
          if (!HasEdges(inst)) return;
          const Graph g = inst.graph;
          t->push_back([=](Evaluator& ev) { return CheckBipartitePowers(ev, g, r_max); });
        },
        nullptr};
    m["nu-cochord"] = {
        "nu = cochord and reg(S/I^(r)) = reg(S/I^r) = 2r+nu-2 in the three hypothesis classes",
        2,
        [] {
          CorpusSpec wc = RandomHTSpec(101, 50, BaseFamily::kWeaklyChordalBipartite, 12);
          CorpusSpec cw;
          cw.kind = CorpusKind::kRandomCameronWalker;
          cw.seed = 202;
          cw.count = 50;
          cw.total_max = 12;
          CorpusSpec vc = RandomHTSpec(303, 50, BaseFamily::kBipartite, 12);
          vc.t_vertex_cover = true;
          vc.max_vertices = 6;
          return std::vector<CorpusSpec>{wc, cw, vc};
        },
        [](const CorpusInstance& inst, int r_max, std::vector<Task>* t) {
          if (!HasEdges(inst)) return;
          const Graph g = inst.graph;
          const std::optional<HTSpec> ht = inst.ht;
          for (int which = 1; which <= 3; ++which) {
            t->push_back([=](Evaluator& ev) -> TheoremCheck {
              if (!NuCochordHypothesis(ev, g, ht, which)) return {};
              return CheckPropNuCochord(ev, g, ht, which);
            });
            t->push_back([=](Evaluator& ev) -> TheoremCheck {
              if (!NuCochordHypothesis(ev, g, ht, which)) return {};
              return CheckCorCamWal(ev, g, ht, which, r_max);
            });
          }
        },
        nullptr};
    m["bipartite-ht"] = {
        "reg(S/I^(r)) <= 2r+reg(S/I)-2 and <= 2r+cochord-2 over bipartite bases",
        3,
        [] { return std::vector<CorpusSpec>{RandomHTSpec(404, 40, BaseFamily::kBipartite, 10)}; },
        [](const CorpusInstance& inst, int r_max, std::vector<Task>* t) {
          if (!inst.ht || !HasEdges(inst)) return;
          const HTSpec s = *inst.ht;
          t->push_back([=](Evaluator& ev) { return CheckThmBipartiteHT(ev, s, r_max); });
          t->push_back([=](Evaluator& ev) { return CheckCorCochordHT(ev, s, r_max); });
        },
        nullptr};
    m["regsum"] = {
        "symbolic powers of disjoint unions: fold formula against direct computation",
        3,
        [] {
          CorpusSpec s = Exhaustive(4);
          s.min_vertices = 2;
          return std::vector<CorpusSpec>{s};
        },
        nullptr,
        [](const std::vector<CorpusInstance>& all, int r_max, std::vector<Task>* t) {
          std::vector<Graph> gs;
          for (const CorpusInstance& inst : all)
            if (HasEdges(inst) && gs.size() < 12) gs.push_back(inst.graph);
          for (size_t i = 0; i < gs.size(); ++i) {
            for (size_t j = i; j < gs.size(); ++j) {
              const Graph a = gs[i], b = gs[j];
              t->push_back([=](Evaluator& ev) { return CheckPropRegSum(ev, a, b, r_max); });
            }
          }
        }};
    m["unicyclic"] = {
        "regularity of H_T over unicyclic bases and of its powers",
        2,
        [] { return std::vector<CorpusSpec>{RandomHTSpec(505, 60, BaseFamily::kUnicyclic, 12)}; },
        [](const CorpusInstance& inst, int r_max, std::vector<Task>* t) {
          if (!inst.ht) return;
          const HTSpec s = *inst.ht;
          t->push_back([=](Evaluator& ev) { return CheckThmUnicyclicReg(ev, s); });
          t->push_back([=](Evaluator& ev) { return CheckPropOrdUni(ev, s, r_max); });
          t->push_back([=](Evaluator& ev) { return CheckPropSymUni(ev, s, r_max); });
          t->push_back([=](Evaluator& ev) { return CheckMainUnicyclic(ev, s, r_max); });
        },
        nullptr};
    m["unicyclic-bare"] = {
        "unicyclic graphs without attachments: reg(S/I^(r)) = reg(S/I^r) = 2r+reg(S/I)-2",
        2,
        [] { return std::vector<CorpusSpec>{Exhaustive(7)}; },
        [](const CorpusInstance& inst, int r_max, std::vector<Task>* t) {
          if (!IsUnicyclicGraph(inst.graph)) return;
          const HTSpec s = inst.ht ? *inst.ht : Bare(inst.graph);
          t->push_back([=](Evaluator& ev) { return CheckThmUnicyclicReg(ev, s); });
          t->push_back([=](Evaluator& ev) { return CheckMainUnicyclic(ev, s, r_max, true); });
        },
        nullptr};
    m["colon"] = {
        "(I(G\\A)^(r) : x_B) = I(G\\A)^(r-|B|+1) at simplicial vertices, and the max-inequality",
        3,
        [] {
          return std::vector<CorpusSpec>{RandomHTSpec(606, 15, BaseFamily::kUnicyclic, 10),
                                         RandomHTSpec(707, 15, BaseFamily::kBipartite, 10)};
        },
        ColonTasks,
        nullptr};
    return m;
  }();
  return suites;
}

}  // namespace

int SuiteReport::Count(Verdict v) const {
  int n = 0;
  for (const TheoremCheck& c : checks) n += c.verdict == v;
  return n;
}

bool SuiteReport::AnyCapHit() const {
  for (const TheoremCheck& c : checks)
    if (c.cap_hit) return true;
  return false;
}

int SuiteReport::ExitCode(bool skips_ok) const {
  if (Count(Verdict::kFail) > 0) return kExitFail;
  if (AnyCapHit() && !skips_ok) return kExitSkips;
  return kExitPass;
}

Json SuiteReport::ToJson(bool with_timing) const {
  Json j;
  j["suite"] = suite;
  j["r_max"] = r_max;
  Json specs = Json::array();
  for (const CorpusSpec& s : corpora) specs.push_back(s.ToJson());
  j["corpora"] = specs;
  int caps = 0;
  for (const TheoremCheck& c : checks) caps += c.cap_hit;
  j["summary"] = {{"checks", checks.size()},
                  {"pass", Count(Verdict::kPass)},
                  {"fail", Count(Verdict::kFail)},
                  {"skipped", Count(Verdict::kSkipped)},
                  {"caps_hit", caps}};
  if (with_timing) j["seconds"] = std::round(seconds * 1000) / 1000;
  Json list = Json::array();
  for (const TheoremCheck& c : checks) list.push_back(c.ToJson(with_timing));
  j["checks"] = list;
  return j;
}

std::vector<std::string> SuiteNames() {
  std::vector<std::string> out;
  for (const auto& [name, def] : Suites()) out.push_back(name);
  return out;
}

std::string SuiteDescriptions() {
  std::string out;
  for (const auto& [name, def] : Suites()) out += "  " + name + ": " + def.description + "\n";
  return out;
}

SuiteReport RunSuite(const std::string& suite, const SuiteOptions& options) {
  auto it = Suites().find(suite);
  if (it == Suites().end()) throw InvalidArgument("unknown suite '" + suite + "'");
  const SuiteDef& def = it->second;
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = suite;
  report.r_max = options.r_max.value_or(def.default_r_max);
  if (report.r_max < 1) throw InvalidArgument("r_max must be at least 1");
  if (options.corpus) {
    report.corpora = {*options.corpus};
  } else {
    report.corpora = def.corpora();
    if (options.seed) {
      for (CorpusSpec& s : report.corpora) s.seed = *options.seed;
    }
  }
  std::vector<CorpusInstance> instances;
  for (const CorpusSpec& s : report.corpora) {
    std::vector<CorpusInstance> part = GenerateCorpus(s);
    instances.insert(instances.end(), part.begin(), part.end());
  }
  std::vector<Task> tasks;
  if (def.expand) {
    for (const CorpusInstance& inst : instances) def.expand(inst, report.r_max, &tasks);
  }
  if (def.global) def.global(instances, report.r_max, &tasks);

  Evaluator ev(options.checks);
  std::vector<TheoremCheck> results(tasks.size());
  internal::ParallelFor(tasks.size(), options.threads,
                        [&](size_t i) { results[i] = tasks[i](ev); });
  // Tasks whose hypothesis filter rejected the instance return an empty id.
  for (TheoremCheck& c : results)
    if (!c.id.empty()) report.checks.push_back(std::move(c));
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

int ThreadsFromEnvironment() {
  if (const char* env = std::getenv("EIL_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace eil
