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

#include "eil/corpus.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <utility>

#include "eil/error.h"
#include "eil/invariants.h"

namespace eil {
namespace {

constexpr int kMaxCanonicalVertices = kMaxExhaustiveVertices + 2;
constexpr int kMaxAttempts = 10'000;

const std::map<CorpusKind, std::string>& KindNames() {
  static const std::map<CorpusKind, std::string> names = {
      {CorpusKind::kAllConnectedLe, "all-connected-le"},
      {CorpusKind::kAllConnectedEq, "all-connected-eq"},
      {CorpusKind::kRandomHT, "random-HT"},
      {CorpusKind::kRandomUnicyclicHT, "random-unicyclic-HT"},
      {CorpusKind::kRandomCameronWalker, "random-cameron-walker"},
      {CorpusKind::kNamed, "named"},
  };
  return names;
}

const std::map<BaseFamily, std::string>& BaseNames() {
  static const std::map<BaseFamily, std::string> names = {
      {BaseFamily::kAny, "any"},
      {BaseFamily::kBipartite, "bipartite"},
      {BaseFamily::kWeaklyChordalBipartite, "weakly-chordal-bipartite"},
      {BaseFamily::kUnicyclic, "unicyclic"},
  };
  return names;
}

const std::map<AttachMode, std::string>& AttachNames() {
  static const std::map<AttachMode, std::string> names = {
      {AttachMode::kAny, "any"},
      {AttachMode::kStarGraphs, "star-graphs"},
      {AttachMode::kStarComplete, "star-complete"},
      {AttachMode::kMixed, "mixed"},
  };
  return names;
}

template <typename E>
E EnumFromName(const std::map<E, std::string>& names, const std::string& s, const char* what) {
  for (const auto& [k, v] : names)
    if (v == s) return k;
  throw InvalidArgument(std::string("unknown ") + what + " '" + s + "'");
}

// ---- canonical form ----

// Iterated degree refinement; colors are isomorphism invariant.
std::vector<int> RefinedColors(const Graph& g) {
  const int n = g.n();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.Degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (int u : g.Adj(v)) sig[v].second.push_back(color[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<std::pair<int, std::vector<int>>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                  sorted.begin());
    }
    const int now = static_cast<int>(sorted.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

uint64_t CodeOf(const Graph& g, const std::vector<int>& order) {
  uint64_t code = 0;
  const int n = g.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.Adjacent(order[i], order[j]) ? 1 : 0);
  return code;
}

// Position -> vertex order maximizing the code among orders that respect
// the refined color classes.
std::vector<int> CanonicalOrder(const Graph& g) {
  const int n = g.n();
  if (n > kMaxCanonicalVertices) {
    throw CapExceeded("canonical form limited to " + std::to_string(kMaxCanonicalVertices) +
                      " vertices");
  }
  const std::vector<int> color = RefinedColors(g);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end) in order
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[order[j]] == color[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::vector<int> best = order;
  uint64_t best_code = CodeOf(g, order);
  // Odometer over the permutations of every cell.
  while (true) {
    int c = static_cast<int>(cells.size()) - 1;
    for (; c >= 0; --c) {
      auto [b, e] = cells[c];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (c < 0) break;
    const uint64_t code = CodeOf(g, order);
    if (code > best_code) {
      best_code = code;
      best = order;
    }
  }
  return best;
}

Graph GraphFromCode(int n, uint64_t code) {
  std::vector<Edge> edges;
  int bit = n * (n - 1) / 2 - 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, --bit)
      if ((code >> bit) & 1) edges.emplace_back(i, j);
  return Graph::Build(n, edges);
}

// ---- random bases ----

bool RandomConnectedBipartite(CorpusRng& rng, int n, Graph* out) {
  const int left = rng.Uniform(1, n - 1);
  std::vector<Edge> edges;
  for (int u = 0; u < left; ++u)
    for (int v = left; v < n; ++v)
      if (rng.Chance(1, 2)) edges.emplace_back(u, v);
  Graph g = Graph::Build(n, edges);
  if (!IsConnected(g)) return false;
  *out = std::move(g);
  return true;
}

bool RandomConnected(CorpusRng& rng, int n, Graph* out) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.Chance(1, 2)) edges.emplace_back(u, v);
  Graph g = Graph::Build(n, edges);
  if (!IsConnected(g)) return false;
  *out = std::move(g);
  return true;
}

// A random tree plus one chord: connected with exactly one cycle.
bool RandomUnicyclic(CorpusRng& rng, int n, Graph* out) {
  if (n < 3) return false;
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(rng.Uniform(0, v - 1), v);
  Graph tree = Graph::Build(n, edges);
  std::vector<Edge> missing;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!tree.Adjacent(u, v)) missing.emplace_back(u, v);
  if (missing.empty()) return false;
  edges.push_back(missing[rng.Uniform(0, static_cast<int>(missing.size()) - 1)]);
  *out = Graph::Build(n, edges);
  return true;
}

bool RandomBase(CorpusRng& rng, BaseFamily family, int n, Graph* out) {
  switch (family) {
    case BaseFamily::kAny:
      return RandomConnected(rng, n, out);
    case BaseFamily::kBipartite:
      return RandomConnectedBipartite(rng, n, out);
    case BaseFamily::kWeaklyChordalBipartite:
      return RandomConnectedBipartite(rng, n, out) && IsWeaklyChordal(*out);
    case BaseFamily::kUnicyclic:
      return RandomUnicyclic(rng, n, out);
  }
  return false;
}

VertexSet RandomVertexCover(CorpusRng& rng, const Graph& g) {
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  for (int i = g.n() - 1; i > 0; --i) std::swap(order[i], order[rng.Uniform(0, i)]);
  VertexSet cover = g.Vertices();
  // Drop vertices in random order while the rest still covers.
  for (int v : order) {
    VertexSet without = cover - VertexSet::Singleton(v);
    if (g.Adj(v).IsSubsetOf(without)) cover = without;
  }
  for (int v : order)
    if (!cover.Contains(v) && rng.Chance(1, 4)) cover.Insert(v);
  return cover;
}

StarOfCliquesSpec RandomStar(CorpusRng& rng, bool complete, int cliques) {
  StarOfCliquesSpec s;
  for (int k = 0; k < cliques; ++k) s.clique_sizes.push_back(complete ? rng.Uniform(2, 4) : 2);
  if (complete && s.IsStarGraph()) s.clique_sizes[rng.Uniform(0, cliques - 1)] = rng.Uniform(3, 4);
  return s;
}

bool RandomHT(CorpusRng& rng, const CorpusSpec& spec, HTSpec* out) {
  const int nb = rng.Uniform(spec.min_vertices, spec.max_vertices);
  HTSpec ht;
  if (!RandomBase(rng, spec.base, nb, &ht.base)) return false;
  VertexSet t;
  if (spec.t_vertex_cover) {
    t = RandomVertexCover(rng, ht.base);
  } else {
    for (int v = 0; v < nb; ++v)
      if (rng.Chance(2, 5)) t.Insert(v);
    if (t.Empty() && !spec.allow_empty_t) t.Insert(rng.Uniform(0, nb - 1));
  }
  const std::vector<int> tv = t.ToVector();
  const int q = static_cast<int>(tv.size());
  std::vector<bool> complete(q);
  switch (spec.attach) {
    case AttachMode::kAny:
      for (int i = 0; i < q; ++i) complete[i] = rng.Chance(1, 2);
      break;
    case AttachMode::kStarGraphs:
      break;
    case AttachMode::kStarComplete:
      complete.assign(q, true);
      break;
    case AttachMode::kMixed: {
      if (q < 2) return false;
      for (int i = 0; i < q; ++i) complete[i] = rng.Chance(1, 2);
      const int a = rng.Uniform(0, q - 1);
      int b = rng.Uniform(0, q - 2);
      if (b >= a) ++b;
      complete[a] = false;
      complete[b] = true;
      break;
    }
  }
  for (int i = 0; i < q; ++i) {
    ht.attachments.push_back({tv[i], RandomStar(rng, complete[i], rng.Uniform(1, 2))});
  }
  if (ht.TotalVertices() > spec.total_max) return false;
  ht.Validate();
  *out = std::move(ht);
  return true;
}

// Connected Cameron-Walker graphs: a star, a star of triangles, or a
// connected bipartite core with leaves on one side and pendant triangles on
// the other.
bool RandomCameronWalker(CorpusRng& rng, int total_max, Graph* out) {
  std::vector<Edge> edges;
  int n = 0;
  auto fresh = [&] { return n++; };
  const int form = rng.Uniform(0, 5);
  if (form == 0) {
    const int c = fresh();
    for (int k = rng.Uniform(1, 5); k > 0; --k) edges.emplace_back(c, fresh());
  } else if (form == 1) {
    const int c = fresh();
    for (int k = rng.Uniform(1, 3); k > 0; --k) {
      const int a = fresh(), b = fresh();
      edges.insert(edges.end(), {{c, a}, {c, b}, {a, b}});
    }
  } else {
    const int nx = rng.Uniform(1, 3), ny = rng.Uniform(1, 3);
    Graph core;
    bool ok = false;
    for (int tries = 0; tries < 100 && !ok; ++tries) {
      std::vector<Edge> ce;
      for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
          if (rng.Chance(2, 3)) ce.emplace_back(x, nx + y);
      core = Graph::Build(nx + ny, ce);
      ok = IsConnected(core);
    }
    if (!ok) return false;
    n = nx + ny;
    edges = core.edges();
    for (int x = 0; x < nx; ++x)
      for (int k = rng.Uniform(1, 2); k > 0; --k) edges.emplace_back(x, fresh());
    for (int y = nx; y < nx + ny; ++y) {
      for (int k = rng.Uniform(0, 1); k > 0; --k) {
        const int a = fresh(), b = fresh();
        edges.insert(edges.end(), {{y, a}, {y, b}, {a, b}});
      }
    }
  }
  if (n > total_max) return false;
  Graph g = Graph::Build(n, edges);
  if (InducedMatchingNumber(g).count != MatchingNumber(g).count) {
    throw InternalError("generated graph is not Cameron-Walker: " + FormatGraphText(g));
  }
  *out = std::move(g);
  return true;
}

HTSpec Spec(Graph base, std::vector<std::pair<int, std::vector<int>>> atts) {
  HTSpec s;
  s.base = std::move(base);
  for (auto& [v, sizes] : atts) s.attachments.push_back({v, StarOfCliquesSpec{sizes}});
  s.Validate();
  return s;
}

CorpusInstance FromSpec(std::string id, HTSpec spec, std::string group = "") {
  CorpusInstance inst;
  inst.id = std::move(id);
  inst.graph = AttachHT(spec).graph;
  inst.ht = std::move(spec);
  inst.group = std::move(group);
  return inst;
}

CorpusInstance FromGraph(std::string id, Graph g, std::string group = "") {
  CorpusInstance inst;
  inst.id = std::move(id);
  inst.graph = std::move(g);
  inst.group = std::move(group);
  return inst;
}

std::vector<CorpusInstance> Named(const std::string& name) {
  std::vector<CorpusInstance> out;
  if (name == "union-example") {
    const std::string group = name;
    out.push_back(FromSpec(name + "/0", Spec(Graph::Cycle(8), {}), group));
    out.push_back(FromSpec(name + "/1", Spec(Graph::Cycle(8), {}), group));
    out.push_back(FromSpec(name + "/2", Spec(Graph::Cycle(10), {}), group));
    out.push_back(FromSpec(name + "/3", Spec(Graph::Cycle(10), {{0, {3}}}), group));
  } else if (name == "c10-k3") {
    out.push_back(FromSpec(name, Spec(Graph::Cycle(10), {{0, {3}}})));
  } else if (name == "c5-k3") {
    out.push_back(FromSpec(name, Spec(Graph::Cycle(5), {{0, {3}}})));
  } else if (name == "c5-attachments") {
    out.push_back(
        FromSpec(name, Spec(Graph::Cycle(5), {{0, {2}}, {2, {3, 5}}, {3, {2, 2, 2}}, {4, {2, 4}}})));
  } else if (name == "small-goldens") {
    out.push_back(FromGraph("K2", Graph::Complete(2)));
    out.push_back(FromGraph("P3", Graph::Path(3)));
    out.push_back(FromGraph("C3", Graph::Cycle(3)));
    out.push_back(FromGraph("C4", Graph::Cycle(4)));
    out.push_back(FromGraph("C5", Graph::Cycle(5)));
    out.push_back(FromGraph("K13", Graph::Star(3)));
    out.push_back(FromGraph("2K2", Graph::Build(4, {{0, 1}, {2, 3}})));
    out.push_back(FromSpec("C3+K2", Spec(Graph::Cycle(3), {{0, {2}}})));
    out.push_back(FromSpec("K2+K3", Spec(Graph::Complete(2), {{0, {3}}})));
    out.push_back(FromSpec("C4+K2cover", Spec(Graph::Cycle(4), {{0, {2}}, {2, {2}}})));
  } else {
    throw InvalidArgument("unknown named corpus '" + name + "'");
  }
  return out;
}

}  // namespace

int CorpusRng::Uniform(int lo, int hi) {
  if (hi < lo) throw InvalidArgument("empty range");
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw unbiased.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

bool CorpusRng::Chance(int num, int den) { return Uniform(0, den - 1) < num; }

void CorpusSpec::Validate() const {
  if (count < 0 || count > kMaxCorpusCount) throw InvalidArgument("corpus count out of range");
  switch (kind) {
    case CorpusKind::kAllConnectedLe:
    case CorpusKind::kAllConnectedEq:
      if (max_vertices < 1 || max_vertices > kMaxExhaustiveVertices) {
        throw InvalidArgument("exhaustive corpora need 1 <= max_vertices <= " +
                              std::to_string(kMaxExhaustiveVertices));
      }
      if (min_vertices < 1 || min_vertices > max_vertices) {
        throw InvalidArgument("bad min_vertices");
      }
      break;
    case CorpusKind::kRandomHT:
    case CorpusKind::kRandomUnicyclicHT:
    case CorpusKind::kRandomCameronWalker:
      if (total_max < 2 || total_max > kMaxVertices) {
        throw InvalidArgument("total_max must lie in [2, " + std::to_string(kMaxVertices) + "]");
      }
      if (kind != CorpusKind::kRandomCameronWalker &&
          (min_vertices < 2 || min_vertices > max_vertices || max_vertices > total_max)) {
        throw InvalidArgument("base size bounds must satisfy 2 <= min <= max <= total_max");
      }
      if (kind == CorpusKind::kRandomUnicyclicHT && max_vertices < 3) {
        throw InvalidArgument("unicyclic bases need at least 3 vertices");
      }
      break;
    case CorpusKind::kNamed: {
      const auto names = NamedCorpora();
      if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw InvalidArgument("unknown named corpus '" + name + "'");
      }
      break;
    }
  }
}

Json CorpusSpec::ToJson() const {
  Json j;
  j["kind"] = KindNames().at(kind);
  switch (kind) {
    case CorpusKind::kAllConnectedLe:
    case CorpusKind::kAllConnectedEq:
      j["min_vertices"] = min_vertices;
      j["max_vertices"] = max_vertices;
      break;
    case CorpusKind::kNamed:
      j["name"] = name;
      break;
    default:
      j["min_vertices"] = min_vertices;
      j["max_vertices"] = max_vertices;
      j["total_max"] = total_max;
      j["seed"] = seed;
      j["count"] = count;
      j["base"] = BaseNames().at(base);
      j["attach"] = AttachNames().at(attach);
      j["t_vertex_cover"] = t_vertex_cover;
      j["allow_empty_t"] = allow_empty_t;
      break;
  }
  return j;
}

CorpusSpec CorpusSpec::FromJson(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InvalidArgument("corpus spec needs a kind");
  CorpusSpec s;
  s.kind = EnumFromName(KindNames(), j.at("kind").get<std::string>(), "corpus kind");
  if (s.kind == CorpusKind::kRandomUnicyclicHT) s.base = BaseFamily::kUnicyclic;
  if (s.kind == CorpusKind::kRandomHT || s.kind == CorpusKind::kRandomUnicyclicHT) {
    s.min_vertices = 2;
  }
  s.min_vertices = j.value("min_vertices", s.min_vertices);
  s.max_vertices = j.value("max_vertices", s.max_vertices);
  s.total_max = j.value("total_max", s.total_max);
  s.seed = j.value("seed", s.seed);
  s.count = j.value("count", s.count);
  if (j.contains("base")) s.base = EnumFromName(BaseNames(), j.at("base").get<std::string>(), "base family");
  if (j.contains("attach")) {
    s.attach = EnumFromName(AttachNames(), j.at("attach").get<std::string>(), "attach mode");
  }
  s.t_vertex_cover = j.value("t_vertex_cover", false);
  s.allow_empty_t = j.value("allow_empty_t", false);
  s.name = j.value("name", std::string());
  if (s.kind == CorpusKind::kRandomUnicyclicHT && s.base != BaseFamily::kUnicyclic) {
    throw InvalidArgument("random-unicyclic-HT requires the unicyclic base family");
  }
  s.Validate();
  return s;
}

std::vector<Graph> ConnectedGraphs(int n) {
  if (n < 1 || n > kMaxExhaustiveVertices) {
    throw CapExceeded("connected graph enumeration limited to " +
                      std::to_string(kMaxExhaustiveVertices) + " vertices");
  }
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(Graph::Edgeless(1));
  } else {
    // Every connected graph has a vertex whose removal keeps it connected.
    std::set<uint64_t> codes;
    for (const Graph& g : ConnectedGraphs(n - 1)) {
      for (uint32_t mask = 1; mask < (uint32_t{1} << (n - 1)); ++mask) {
        std::vector<Edge> edges = g.edges();
        for (int v : VertexSet(mask)) edges.emplace_back(v, n - 1);
        codes.insert(CanonicalCode(Graph::Build(n, edges)));
      }
    }
    for (uint64_t c : codes) out.push_back(GraphFromCode(n, c));
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(n, out);
  return out;
}

Graph CanonicalForm(const Graph& g) { return GraphFromCode(g.n(), CanonicalCode(g)); }

uint64_t CanonicalCode(const Graph& g) { return CodeOf(g, CanonicalOrder(g)); }

std::vector<std::string> NamedCorpora() {
  return {"union-example", "c10-k3", "c5-k3", "c5-attachments", "small-goldens"};
}

std::vector<CorpusInstance> GenerateCorpus(const CorpusSpec& spec) {
  spec.Validate();
  std::vector<CorpusInstance> out;
  const std::string kind = KindNames().at(spec.kind);
  switch (spec.kind) {
    case CorpusKind::kAllConnectedLe:
    case CorpusKind::kAllConnectedEq: {
      const int lo = spec.kind == CorpusKind::kAllConnectedEq ? spec.max_vertices : spec.min_vertices;
      for (int n = lo; n <= spec.max_vertices; ++n) {
        const std::vector<Graph> graphs = ConnectedGraphs(n);
        for (size_t i = 0; i < graphs.size(); ++i) {
          out.push_back(FromGraph("n" + std::to_string(n) + "-" + std::to_string(i), graphs[i]));
        }
      }
      break;
    }
    case CorpusKind::kRandomHT:
    case CorpusKind::kRandomUnicyclicHT: {
      CorpusSpec s = spec;
      if (spec.kind == CorpusKind::kRandomUnicyclicHT) s.base = BaseFamily::kUnicyclic;
      CorpusRng rng(spec.seed);
      int attempts = 0;
      while (static_cast<int>(out.size()) < spec.count) {
        if (++attempts > kMaxAttempts * std::max(1, spec.count)) {
          throw InvalidArgument("corpus bounds admit too few instances");
        }
        HTSpec ht;
        if (!RandomHT(rng, s, &ht)) continue;
        out.push_back(FromSpec(kind + "-" + std::to_string(spec.seed) + "-" +
                                   std::to_string(out.size()),
                               std::move(ht)));
      }
      break;
    }
    case CorpusKind::kRandomCameronWalker: {
      CorpusRng rng(spec.seed);
      int attempts = 0;
      while (static_cast<int>(out.size()) < spec.count) {
        if (++attempts > kMaxAttempts * std::max(1, spec.count)) {
          throw InvalidArgument("corpus bounds admit too few instances");
        }
        Graph g;
        if (!RandomCameronWalker(rng, spec.total_max, &g)) continue;
        out.push_back(FromGraph(kind + "-" + std::to_string(spec.seed) + "-" +
                                    std::to_string(out.size()),
                                std::move(g)));
      }
      break;
    }
    case CorpusKind::kNamed:
      out = Named(spec.name);
      break;
  }
  return out;
}

Json CorpusInstanceToJson(const CorpusInstance& inst) {
  Json j;
  j["id"] = inst.id;
  j["graph"] = GraphToJson(inst.graph);
  if (inst.ht) j["ht"] = HTSpecToJson(*inst.ht);
  if (!inst.group.empty()) j["group"] = inst.group;
  return j;
}

CorpusInstance CorpusInstanceFromJson(const Json& j) {
  CorpusInstance inst;
  inst.id = j.value("id", std::string());
  if (j.contains("ht")) {
    inst.ht = HTSpecFromJson(j.at("ht"));
    inst.graph = AttachHT(*inst.ht).graph;
    if (j.contains("graph") && !(GraphFromJson(j.at("graph")) == inst.graph)) {
      throw InvalidArgument("instance graph does not match its H_T spec");
    }
  } else {
    inst.graph = GraphFromJson(j.at("graph"));
  }
  inst.group = j.value("group", std::string());
  return inst;
}

}  // namespace eil
