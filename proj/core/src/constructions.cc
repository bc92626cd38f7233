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

#include "eil/constructions.h"

#include <algorithm>
#include <set>
#include <string>

#include "eil/error.h"
#include "eil/invariants.h"

namespace eil {

bool StarOfCliquesSpec::IsStarGraph() const {
  return std::all_of(clique_sizes.begin(), clique_sizes.end(),
                     [](int s) { return s == 2; });
}

int StarOfCliquesSpec::VertexCount() const {
  int count = 1;
  for (int s : clique_sizes) count += s - 1;
  return count;
}

void StarOfCliquesSpec::Validate() const {
  if (clique_sizes.empty()) throw InvalidArgument("star of cliques needs a clique");
  for (int s : clique_sizes) {
    if (s < 2) throw InvalidArgument("clique size " + std::to_string(s) + " below 2");
  }
  if (VertexCount() > kMaxVertices) throw InvalidArgument("star of cliques too large");
}

StarOfCliques BuildStarOfCliques(const StarOfCliquesSpec& spec) {
  spec.Validate();
  std::vector<Edge> edges;
  int next = 1;
  for (int s : spec.clique_sizes) {
    std::vector<int> members = {0};
    for (int k = 1; k < s; ++k) members.push_back(next++);
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = a + 1; b < members.size(); ++b) edges.emplace_back(members[a], members[b]);
  }
  return {Graph::Build(next, edges), 0};
}

int HTSpec::p() const {
  int count = 0;
  for (const Attachment& a : attachments) count += a.star.IsStarGraph();
  return count;
}

VertexSet HTSpec::T() const {
  VertexSet t;
  for (const Attachment& a : attachments) t.Insert(a.vertex);
  return t;
}

int HTSpec::TotalVertices() const {
  int total = base.n();
  for (const Attachment& a : attachments) total += a.star.VertexCount() - 1;
  return total;
}

void HTSpec::Validate() const {
  VertexSet seen;
  for (const Attachment& a : attachments) {
    if (a.vertex < 0 || a.vertex >= base.n()) {
      throw InvalidArgument("attachment vertex " + std::to_string(a.vertex) + " not in base");
    }
    if (seen.Contains(a.vertex)) {
      throw InvalidArgument("duplicate attachment vertex " + std::to_string(a.vertex));
    }
    seen.Insert(a.vertex);
    a.star.Validate();
  }
  if (TotalVertices() > kMaxVertices) {
    throw InvalidArgument("H_T would have " + std::to_string(TotalVertices()) +
                          " vertices (cap " + std::to_string(kMaxVertices) + ")");
  }
}

HTGraph AttachHT(const HTSpec& spec) {
  spec.Validate();
  HTGraph out;
  std::vector<Edge> edges = spec.base.edges();
  int next = spec.base.n();
  for (const Attachment& a : spec.attachments) {
    AttachmentLayout layout;
    layout.vertex = a.vertex;
    layout.star_graph = a.star.IsStarGraph();
    layout.vertices.Insert(a.vertex);
    for (int s : a.star.clique_sizes) {
      VertexSet clique = VertexSet::Singleton(a.vertex);
      for (int k = 1; k < s; ++k) clique.Insert(next++);
      std::vector<int> m = clique.ToVector();
      for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j) edges.emplace_back(m[i], m[j]);
      layout.cliques.push_back(clique);
      layout.vertices |= clique;
    }
    out.layout.push_back(std::move(layout));
  }
  std::vector<std::string> names;
  if (!spec.base.names().empty()) {
    names = spec.base.names();
    for (int v = spec.base.n(); v < next; ++v) names.push_back("a" + std::to_string(v));
  }
  out.graph = Graph::Build(next, edges, names);
  return out;
}

int Kappa(const HTSpec& spec) {
  int kappa = 0;
  for (const Attachment& a : spec.attachments)
    if (a.star.IsStarComplete()) kappa += a.star.VertexCount();
  return kappa;
}

Json HTSpecToJson(const HTSpec& spec) {
  Json attachments = Json::array();
  for (const Attachment& a : spec.attachments) {
    attachments.push_back(Json{{"vertex", a.vertex}, {"cliques", a.star.clique_sizes}});
  }
  return Json{{"base", GraphToJson(spec.base)}, {"attachments", attachments}};
}

HTSpec HTSpecFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("base")) throw InvalidArgument("HT spec needs \"base\"");
  HTSpec spec;
  spec.base = GraphFromJson(j.at("base"));
  if (j.contains("attachments")) {
    for (const auto& a : j.at("attachments")) {
      Attachment att;
      att.vertex = a.at("vertex").get<int>();
      att.star.clique_sizes = a.at("cliques").get<std::vector<int>>();
      spec.attachments.push_back(std::move(att));
    }
  }
  spec.Validate();
  return spec;
}

// ---------------------------------------------------------------------------
// Unicyclic decomposition.

namespace {

// Orders a 2-regular connected vertex set as a cycle walk from its least
// vertex towards its smaller neighbor. Empty result if `alive` is no cycle.
std::vector<int> WalkCycle(const Graph& g, VertexSet alive) {
  if (alive.Size() < 3) return {};
  for (int v : alive)
    if ((g.Adj(v) & alive).Size() != 2) return {};
  std::vector<int> cycle;
  int prev = -1;
  int cur = alive.Min();
  do {
    cycle.push_back(cur);
    VertexSet next = (g.Adj(cur) & alive) - VertexSet::Singleton(prev < 0 ? cur : prev);
    if (prev < 0) next = VertexSet::Singleton(next.Min());
    prev = cur;
    cur = next.Min();
  } while (cur != cycle.front() && static_cast<int>(cycle.size()) <= alive.Size());
  if (static_cast<int>(cycle.size()) != alive.Size()) return {};
  return cycle;
}

VertexSet StripLeaves(const Graph& g) {
  VertexSet alive = g.Vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : alive) {
      if ((g.Adj(v) & alive).Size() <= 1) {
        alive.Erase(v);
        changed = true;
      }
    }
  }
  return alive;
}

VertexSet StripSimplicial(const Graph& g) {
  VertexSet alive = g.Vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : alive) {
      if (IsSimplicialIn(g, alive, v)) {
        alive.Erase(v);
        changed = true;
      }
    }
  }
  return alive;
}

}  // namespace

UnicyclicDecomposition DecomposeUnicyclic(const Graph& g, const std::vector<int>& cycle) {
  std::string why;
  if (!ValidateInducedCycle(g, cycle, 3, &why)) {
    throw InvalidArgument("not an induced cycle: " + why);
  }
  if (!IsConnected(g)) throw InvalidArgument("graph is not connected");
  const VertexSet on_cycle = VertexSet::FromList(cycle);
  std::vector<Edge> kept;
  for (auto [u, v] : g.edges()) {
    if (on_cycle.Contains(u) && on_cycle.Contains(v)) continue;
    kept.emplace_back(u, v);
  }
  const Graph rest = SpanningSubgraph(g, kept);
  UnicyclicDecomposition d;
  d.cycle = cycle;
  // Rotate to the least label, heading towards its smaller cycle neighbor.
  auto least = std::min_element(d.cycle.begin(), d.cycle.end());
  std::rotate(d.cycle.begin(), least, d.cycle.end());
  if (d.cycle.size() > 2 && d.cycle.back() < d.cycle[1]) {
    std::reverse(d.cycle.begin() + 1, d.cycle.end());
  }
  for (VertexSet comp : ConnectedComponents(rest)) {
    VertexSet meet = comp & on_cycle;
    if (meet.Size() != 1) {
      throw InvalidArgument("attached piece " + comp.ToString() +
                            " does not meet the cycle in exactly one vertex");
    }
    if (comp.Size() == 1) continue;
    if (!IsChordal(Induced(g, comp).graph).chordal) {
      throw InvalidArgument("attached piece " + comp.ToString() + " is not chordal");
    }
    const int y = meet.Min();
    d.attach_points.push_back(y);
    d.parts.push_back(comp);
    const VertexSet nbrs = g.Adj(y) & comp;
    d.gamma |= nbrs;
    d.h_parts.push_back(comp - nbrs - VertexSet::Singleton(y));
  }
  // Components come ordered by least vertex; order by attach point instead.
  std::vector<size_t> order(d.attach_points.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return d.attach_points[a] < d.attach_points[b]; });
  UnicyclicDecomposition sorted = d;
  for (size_t i = 0; i < order.size(); ++i) {
    sorted.attach_points[i] = d.attach_points[order[i]];
    sorted.parts[i] = d.parts[order[i]];
    sorted.h_parts[i] = d.h_parts[order[i]];
  }
  return sorted;
}

UnicyclicDecomposition DecomposeUnicyclic(const Graph& g) {
  if (!IsConnected(g) || g.n() == 0) throw InvalidArgument("graph is not connected");
  std::vector<int> cycle;
  if (g.NumEdges() == g.n()) cycle = WalkCycle(g, StripLeaves(g));
  // Chordal pieces glued to a cycle of length >= 4 peel off vertex by vertex.
  if (cycle.empty()) {
    cycle = WalkCycle(g, StripSimplicial(g));
    if (cycle.size() < 4) cycle.clear();
  }
  if (cycle.empty()) {
    throw InvalidArgument("cannot identify a unique cycle; build from an HT spec instead");
  }
  return DecomposeUnicyclic(g, cycle);
}

UnicyclicDecomposition DecomposeUnicyclic(const HTSpec& spec) {
  const Graph& h = spec.base;
  if (!IsConnected(h) || h.NumEdges() != h.n()) {
    throw InvalidArgument("base graph is not connected unicyclic");
  }
  std::vector<int> cycle = WalkCycle(h, StripLeaves(h));
  if (cycle.empty()) throw InternalError("leaf stripping left no cycle");
  return DecomposeUnicyclic(AttachHT(spec).graph, cycle);
}

Json UnicyclicDecompositionToJson(const UnicyclicDecomposition& d) {
  Json parts = Json::array();
  Json h_parts = Json::array();
  for (VertexSet s : d.parts) parts.push_back(s.ToVector());
  for (VertexSet s : d.h_parts) h_parts.push_back(s.ToVector());
  return Json{{"cycle", d.cycle},         {"attach_points", d.attach_points},
              {"parts", parts},           {"gamma", d.gamma.ToVector()},
              {"h_parts", h_parts}};
}

// ---------------------------------------------------------------------------
// Explicit covers.

namespace {

using EdgeSet = std::set<Edge>;

Edge Sorted(int u, int v) { return u < v ? Edge(u, v) : Edge(v, u); }

// Star-side cover: an optimal cover of G[union of V(K(x))], each part then
// grown by the H-edges at every center whose star it touches.
std::vector<EdgeSet> LiftStarCover(const HTSpec& spec, const HTGraph& ht,
                                   const std::vector<size_t>& which) {
  VertexSet core;
  for (size_t a : which) core |= ht.layout[a].vertices;
  InducedSubgraph sub = Induced(ht.graph, core);
  CochordResult best = CochordalCoverNumber(sub.graph);
  if (!best.exact || !best.cover) {
    throw CapExceeded("exact cover search on the star-side core ran out of budget");
  }
  std::vector<EdgeSet> parts;
  for (const auto& part : best.cover->parts) {
    EdgeSet lifted;
    for (auto [u, v] : part) lifted.insert(Sorted(sub.to_parent[u], sub.to_parent[v]));
    EdgeSet extra;
    for (size_t a : which) {
      const AttachmentLayout& lay = ht.layout[a];
      bool touches = false;
      for (const Edge& e : lifted) {
        // Only x is a base vertex of V(K(x)), so this is an edge of K(x).
        bool in_star = lay.vertices.Contains(e.first) && lay.vertices.Contains(e.second);
        if (in_star) {
          touches = true;
          break;
        }
      }
      if (!touches) continue;
      for (int u : spec.base.Adj(lay.vertex)) extra.insert(Sorted(u, lay.vertex));
    }
    lifted.insert(extra.begin(), extra.end());
    parts.push_back(std::move(lifted));
  }
  return parts;
}

// Star-complete side: one part per clique of size >= 3, plus every H-edge and
// pendant edge at that clique's center.
std::vector<EdgeSet> CliqueParts(const HTSpec& spec, const HTGraph& ht,
                                 const std::vector<size_t>& which) {
  std::vector<EdgeSet> parts;
  for (size_t a : which) {
    const AttachmentLayout& lay = ht.layout[a];
    const int x = lay.vertex;
    for (VertexSet clique : lay.cliques) {
      if (clique.Size() < 3) continue;
      EdgeSet part;
      std::vector<int> m = clique.ToVector();
      for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j) part.insert(Edge(m[i], m[j]));
      for (int u : spec.base.Adj(x)) part.insert(Sorted(u, x));
      for (int u : lay.vertices) {
        if (u != x && ht.graph.Degree(u) == 1) part.insert(Sorted(u, x));
      }
      parts.push_back(std::move(part));
    }
  }
  return parts;
}

}  // namespace

const char* CoverCaseName(CoverCase c) {
  switch (c) {
    case CoverCase::kAllStarGraphs:
      return "a";
    case CoverCase::kAllStarComplete:
      return "b";
    case CoverCase::kMixed:
      return "c";
  }
  return "?";
}

HTCover ConstructCochordalCoverHT(const HTSpec& spec) {
  spec.Validate();
  if (!IsBipartite(spec.base).bipartite) throw InvalidArgument("base graph is not bipartite");
  if (!IsVertexCover(spec.base, spec.T())) {
    throw InvalidArgument("attachment vertices do not cover E(H)");
  }
  const HTGraph ht = AttachHT(spec);
  std::vector<size_t> stars;
  std::vector<size_t> completes;
  for (size_t a = 0; a < spec.attachments.size(); ++a)
    (spec.attachments[a].star.IsStarGraph() ? stars : completes).push_back(a);

  HTCover out;
  out.which = completes.empty() ? CoverCase::kAllStarGraphs
              : stars.empty()   ? CoverCase::kAllStarComplete
                                : CoverCase::kMixed;
  std::vector<EdgeSet> parts;
  if (!stars.empty()) parts = LiftStarCover(spec, ht, stars);
  EdgeSet star_side;
  for (const EdgeSet& p : parts) star_side.insert(p.begin(), p.end());
  if (out.which == CoverCase::kMixed) {
    // Edges of G[U + star vertices] that the lift leaves to the other side.
    VertexSet piece;
    for (size_t a : stars) {
      piece |= ht.layout[a].vertices;
      piece |= spec.base.Adj(ht.layout[a].vertex);
    }
    for (const Edge& e : ht.graph.edges()) {
      if (piece.Contains(e.first) && piece.Contains(e.second) && !star_side.count(e)) {
        out.ambiguous_edges.push_back(e);
      }
    }
  }
  for (EdgeSet& p : CliqueParts(spec, ht, completes)) parts.push_back(std::move(p));

  for (const EdgeSet& p : parts) out.cover.parts.emplace_back(p.begin(), p.end());
  std::string why;
  if (!ValidateCoChordalCover(ht.graph, out.cover, &why)) {
    throw InternalError(std::string("constructed cover (case ") + CoverCaseName(out.which) +
                        ") failed validation: " + why);
  }
  return out;
}

}  // namespace eil
