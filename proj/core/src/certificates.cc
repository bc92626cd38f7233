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

#include "eil/certificates.h"

#include <algorithm>
#include <set>
#include <string>

#include "eil/error.h"

namespace eil {
namespace {

bool Fail(std::string* why, std::string msg) {
  if (why != nullptr) *why = std::move(msg);
  return false;
}

std::string EdgeStr(Edge e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

// Chordality by maximum cardinality search followed by a PEO check
// (Tarjan-Yannakakis). Deliberately a different method from the simplicial
// peeling used by the invariant searches.
bool ChordalByMcs(const std::array<VertexSet, kMaxVertices>& adj, VertexSet verts) {
  const int n = verts.Size();
  if (n <= 3) return true;
  std::vector<int> order;  // visit order; reversed it is a PEO candidate
  std::array<int, kMaxVertices> weight{};
  VertexSet left = verts;
  while (!left.Empty()) {
    int best = -1;
    for (int v : left)
      if (best < 0 || weight[v] > weight[best]) best = v;
    order.push_back(best);
    left.Erase(best);
    for (int u : adj[best] & left) ++weight[u];
  }
  // In the PEO (reverse visit order) each vertex's later neighbors are the
  // neighbors visited before it; they must form a clique.
  std::array<int, kMaxVertices> pos{};
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    int v = order[i];
    VertexSet earlier;
    for (int u : adj[v] & verts)
      if (pos[u] < i) earlier.Insert(u);
    for (int a : earlier)
      for (int b : earlier)
        if (a < b && !adj[a].Contains(b)) return false;
  }
  return true;
}

bool CheckEdgeOf(const Graph& g, Edge e, std::string* why) {
  if (e.first < 0 || e.second < 0 || e.first >= g.n() || e.second >= g.n() ||
      !g.Adjacent(e.first, e.second)) {
    return Fail(why, "pair " + EdgeStr(e) + " is not an edge of G");
  }
  return true;
}

Json EdgeListJson(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back(Json::array({u, v}));
  return out;
}

std::vector<Edge> EdgeListFromJson(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw InvalidArgument("edge must be [u, v]");
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

void ExpectKind(const Json& j, std::initializer_list<const char*> kinds) {
  if (!j.is_object() || !j.contains("kind")) {
    throw InvalidArgument("certificate JSON lacks a \"kind\" tag");
  }
  const std::string kind = j.at("kind").get<std::string>();
  for (const char* k : kinds)
    if (kind == k) return;
  throw InvalidArgument("unexpected certificate kind \"" + kind + "\"");
}

}  // namespace

bool ValidateMatching(const Graph& g, const MatchingCertificate& cert,
                      std::string* why) {
  VertexSet used;
  for (Edge e : cert.edges) {
    if (!CheckEdgeOf(g, e, why)) return false;
    if (used.Contains(e.first) || used.Contains(e.second)) {
      return Fail(why, "edge " + EdgeStr(e) + " shares a vertex with another edge");
    }
    used.Insert(e.first);
    used.Insert(e.second);
  }
  if (cert.kind == MatchingKind::kInduced) {
    for (size_t i = 0; i < cert.edges.size(); ++i) {
      for (size_t j = i + 1; j < cert.edges.size(); ++j) {
        auto [a, b] = cert.edges[i];
        auto [c, d] = cert.edges[j];
        if (g.Adjacent(a, c) || g.Adjacent(a, d) || g.Adjacent(b, c) ||
            g.Adjacent(b, d)) {
          return Fail(why, "edges " + EdgeStr(cert.edges[i]) + " and " +
                               EdgeStr(cert.edges[j]) + " are joined by an edge");
        }
      }
    }
  }
  return true;
}

bool ValidateCoChordalCover(const Graph& g, const CoChordalCover& cover,
                            std::string* why) {
  std::set<Edge> covered;
  for (size_t p = 0; p < cover.parts.size(); ++p) {
    std::array<VertexSet, kMaxVertices> part_adj{};
    VertexSet touched;
    for (Edge e : cover.parts[p]) {
      if (!CheckEdgeOf(g, e, why)) return false;
      auto [u, v] = e;
      part_adj[u].Insert(v);
      part_adj[v].Insert(u);
      touched.Insert(u);
      touched.Insert(v);
      covered.insert(u < v ? e : Edge(v, u));
    }
    std::array<VertexSet, kMaxVertices> comp_adj{};
    for (int u : touched) comp_adj[u] = (touched - part_adj[u]) - VertexSet::Singleton(u);
    if (!ChordalByMcs(comp_adj, touched)) {
      return Fail(why, "part " + std::to_string(p) + " does not have a chordal complement");
    }
  }
  for (Edge e : g.edges()) {
    if (!covered.count(e)) return Fail(why, "edge " + EdgeStr(e) + " is not covered");
  }
  return true;
}

bool ValidateEliminationOrder(const Graph& g, const EliminationOrder& order,
                              std::string* why) {
  if (static_cast<int>(order.ordering.size()) != g.n()) {
    return Fail(why, "ordering length differs from n");
  }
  VertexSet seen;
  for (int v : order.ordering) {
    if (v < 0 || v >= g.n() || seen.Contains(v)) {
      return Fail(why, "ordering is not a permutation of V(G)");
    }
    seen.Insert(v);
  }
  VertexSet remaining = g.Vertices();
  for (int v : order.ordering) {
    VertexSet nbrs = g.Adj(v) & remaining;
    for (int a : nbrs)
      for (int b : nbrs)
        if (a < b && !g.Adjacent(a, b)) {
          return Fail(why, "vertex " + std::to_string(v) +
                               " is not simplicial when eliminated");
        }
    remaining.Erase(v);
  }
  return true;
}

bool ValidateInducedCycle(const Graph& g, const std::vector<int>& cycle,
                          int min_length, std::string* why) {
  const int k = static_cast<int>(cycle.size());
  if (k < std::max(3, min_length)) return Fail(why, "cycle too short");
  VertexSet members;
  for (int v : cycle) {
    if (v < 0 || v >= g.n() || members.Contains(v)) {
      return Fail(why, "cycle repeats a vertex or leaves V(G)");
    }
    members.Insert(v);
  }
  for (int i = 0; i < k; ++i) {
    int v = cycle[i];
    VertexSet expected = {cycle[(i + 1) % k], cycle[(i + k - 1) % k]};
    if ((g.Adj(v) & members) != expected) {
      return Fail(why, "vertex " + std::to_string(v) + " has a chord or a missing cycle edge");
    }
  }
  return true;
}

bool ValidateBipartition(const Graph& g, const Bipartition& parts, std::string* why) {
  if (parts.left.Intersects(parts.right) || (parts.left | parts.right) != g.Vertices()) {
    return Fail(why, "sides do not partition V(G)");
  }
  for (auto [u, v] : g.edges()) {
    if (parts.left.Contains(u) == parts.left.Contains(v)) {
      return Fail(why, "edge " + EdgeStr({u, v}) + " lies inside one side");
    }
  }
  return true;
}

bool ValidateOddCycle(const Graph& g, const std::vector<int>& cycle, std::string* why) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3 || k % 2 == 0) return Fail(why, "cycle length is not odd");
  VertexSet members;
  for (int v : cycle) {
    if (v < 0 || v >= g.n() || members.Contains(v)) return Fail(why, "repeated vertex");
    members.Insert(v);
  }
  for (int i = 0; i < k; ++i) {
    if (!g.Adjacent(cycle[i], cycle[(i + 1) % k])) return Fail(why, "missing cycle edge");
  }
  return true;
}

bool ValidateVertexCoverList(const Graph& g, const VertexCoverList& list,
                             std::string* why) {
  auto covers_all = [&](uint32_t mask) {
    for (auto [u, v] : g.edges())
      if (!((mask >> u) & 1u) && !((mask >> v) & 1u)) return false;
    return true;
  };
  for (size_t i = 0; i + 1 < list.covers.size(); ++i) {
    if (!(list.covers[i] < list.covers[i + 1])) return Fail(why, "list is not sorted");
  }
  std::vector<VertexSet> expected;
  const uint32_t limit = uint32_t{1} << g.n();
  for (uint32_t mask = 0; mask < limit; ++mask) {
    if (!covers_all(mask)) continue;
    bool minimal = true;
    for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      uint32_t without = mask & ~(rest & (~rest + 1));
      if (covers_all(without)) {
        minimal = false;
        break;
      }
    }
    if (minimal) expected.emplace_back(mask);
  }
  if (expected != list.covers) {
    return Fail(why, "list differs from the enumerated minimal vertex covers");
  }
  return true;
}

Json ToJson(const MatchingCertificate& cert) {
  Json j;
  j["kind"] = cert.kind == MatchingKind::kInduced ? "induced_matching" : "matching";
  j["size"] = cert.edges.size();
  j["edges"] = EdgeListJson(cert.edges);
  return j;
}

Json ToJson(const CoChordalCover& cover) {
  Json j;
  j["kind"] = "cochordal_cover";
  j["size"] = cover.parts.size();
  Json parts = Json::array();
  for (const auto& p : cover.parts) parts.push_back(EdgeListJson(p));
  j["parts"] = std::move(parts);
  return j;
}

Json ToJson(const EliminationOrder& order) {
  Json j;
  j["kind"] = "elimination_order";
  j["ordering"] = order.ordering;
  return j;
}

Json ToJson(const Bipartition& parts) {
  Json j;
  j["kind"] = "bipartition";
  j["left"] = parts.left.ToVector();
  j["right"] = parts.right.ToVector();
  return j;
}

Json ToJson(const VertexCoverList& list) {
  Json j;
  j["kind"] = "vertex_covers";
  Json covers = Json::array();
  for (VertexSet c : list.covers) covers.push_back(c.ToVector());
  j["covers"] = std::move(covers);
  return j;
}

MatchingCertificate MatchingFromJson(const Json& j) {
  ExpectKind(j, {"matching", "induced_matching"});
  MatchingCertificate cert;
  cert.kind = j.at("kind") == "induced_matching" ? MatchingKind::kInduced
                                                 : MatchingKind::kPlain;
  cert.edges = EdgeListFromJson(j.at("edges"));
  return cert;
}

CoChordalCover CoChordalCoverFromJson(const Json& j) {
  ExpectKind(j, {"cochordal_cover"});
  CoChordalCover cover;
  for (const auto& p : j.at("parts")) cover.parts.push_back(EdgeListFromJson(p));
  return cover;
}

EliminationOrder EliminationOrderFromJson(const Json& j) {
  ExpectKind(j, {"elimination_order"});
  return EliminationOrder{j.at("ordering").get<std::vector<int>>()};
}

Bipartition BipartitionFromJson(const Json& j) {
  ExpectKind(j, {"bipartition"});
  return Bipartition{VertexSet::FromList(j.at("left").get<std::vector<int>>()),
                     VertexSet::FromList(j.at("right").get<std::vector<int>>())};
}

VertexCoverList VertexCoverListFromJson(const Json& j) {
  ExpectKind(j, {"vertex_covers"});
  VertexCoverList list;
  for (const auto& c : j.at("covers"))
    list.covers.push_back(VertexSet::FromList(c.get<std::vector<int>>()));
  return list;
}

bool ValidateCertificateJson(const Graph& g, const Json& j, std::string* why) {
  try {
    ExpectKind(j, {"matching", "induced_matching", "cochordal_cover",
                   "elimination_order", "bipartition", "vertex_covers"});
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "matching" || kind == "induced_matching")
      return ValidateMatching(g, MatchingFromJson(j), why);
    if (kind == "cochordal_cover")
      return ValidateCoChordalCover(g, CoChordalCoverFromJson(j), why);
    if (kind == "elimination_order")
      return ValidateEliminationOrder(g, EliminationOrderFromJson(j), why);
    if (kind == "bipartition") return ValidateBipartition(g, BipartitionFromJson(j), why);
    return ValidateVertexCoverList(g, VertexCoverListFromJson(j), why);
  } catch (const std::exception& ex) {
    return Fail(why, ex.what());
  }
}

}  // namespace eil
