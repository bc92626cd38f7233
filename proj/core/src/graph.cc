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

#include "eil/graph.h"

#include <algorithm>
#include <string>

#include "eil/error.h"

namespace eil {

std::string VertexSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

Graph Graph::Build(int n, const std::vector<Edge>& edges,
                   std::vector<std::string> names) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidArgument("graph order " + std::to_string(n) +
                          " outside supported range 0.." +
                          std::to_string(kMaxVertices));
  }
  if (!names.empty() && static_cast<int>(names.size()) != n) {
    throw InvalidArgument("names list length does not match n");
  }
  Graph g;
  g.n_ = n;
  g.names_ = std::move(names);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidArgument("edge {" + std::to_string(u) + "," +
                            std::to_string(v) + "} has an endpoint out of range");
    }
    if (u == v) {
      throw InvalidArgument("loop edge at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    if (!g.adj_[u].Contains(v)) {
      g.adj_[u].Insert(v);
      g.adj_[v].Insert(u);
      g.edges_.emplace_back(u, v);
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

Graph Graph::Path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Build(n, e);
}

Graph Graph::Cycle(int n) {
  if (n < 3) throw InvalidArgument("cycles need at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Build(n, e);
}

Graph Graph::Complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Build(n, e);
}

Graph Graph::Edgeless(int n) { return Build(n, {}); }

Graph Graph::Star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Build(leaves + 1, e);
}

int Graph::EdgeIndex(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge(u, v));
  if (it == edges_.end() || *it != Edge(u, v)) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> InducedSubgraph::FromParent(int parent_n) const {
  std::vector<int> back(parent_n, -1);
  for (int i = 0; i < static_cast<int>(to_parent.size()); ++i) back[to_parent[i]] = i;
  return back;
}

VertexSet InducedSubgraph::PullBack(VertexSet child_set) const {
  VertexSet out;
  for (int v : child_set) out.Insert(to_parent[v]);
  return out;
}

namespace {

void CheckVertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for n=" +
                          std::to_string(g.n()));
  }
}

void CheckSubset(const Graph& g, VertexSet s) {
  if (!s.IsSubsetOf(g.Vertices())) {
    throw InvalidArgument("vertex set " + s.ToString() + " not contained in V(G)");
  }
}

}  // namespace

VertexSet Neighborhood(const Graph& g, int u, bool closed) {
  CheckVertex(g, u);
  VertexSet s = g.Adj(u);
  if (closed) s.Insert(u);
  return s;
}

InducedSubgraph Induced(const Graph& g, VertexSet kept) {
  CheckSubset(g, kept);
  InducedSubgraph out;
  out.to_parent = kept.ToVector();
  std::vector<int> back = out.FromParent(g.n());
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (back[u] >= 0 && back[v] >= 0) edges.emplace_back(back[u], back[v]);
  }
  std::vector<std::string> names;
  if (!g.names().empty()) {
    for (int p : out.to_parent) names.push_back(g.names()[p]);
  }
  out.graph = Graph::Build(static_cast<int>(out.to_parent.size()), edges,
                           std::move(names));
  return out;
}

InducedSubgraph DeleteVertices(const Graph& g, VertexSet removed) {
  CheckSubset(g, removed);
  return Induced(g, g.Vertices() - removed);
}

Graph Complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.Adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::Build(g.n(), edges, g.names());
}

Graph DisjointUnion(const Graph& first, const Graph& second) {
  const int shift = first.n();
  std::vector<Edge> edges = first.edges();
  for (auto [u, v] : second.edges()) edges.emplace_back(u + shift, v + shift);
  std::vector<std::string> names;
  if (!first.names().empty() || !second.names().empty()) {
    for (int i = 0; i < first.n(); ++i)
      names.push_back(first.names().empty() ? std::to_string(i) : first.names()[i]);
    for (int i = 0; i < second.n(); ++i)
      names.push_back(second.names().empty() ? std::to_string(i + shift)
                                             : second.names()[i]);
  }
  return Graph::Build(first.n() + second.n(), edges, std::move(names));
}

bool IsClique(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(s - VertexSet::Singleton(v)).IsSubsetOf(g.Adj(v))) return false;
  }
  return true;
}

bool IsSimplicial(const Graph& g, int v) {
  CheckVertex(g, v);
  return IsClique(g, g.Adj(v));
}

bool IsSimplicialIn(const Graph& g, VertexSet within, int v) {
  return IsClique(g, g.Adj(v) & within);
}

std::vector<VertexSet> ConnectedComponents(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.Vertices();
  while (!unseen.Empty()) {
    VertexSet comp = VertexSet::Singleton(unseen.Min());
    VertexSet frontier = comp;
    while (!frontier.Empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.Adj(v);
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool IsConnected(const Graph& g) { return ConnectedComponents(g).size() <= 1; }

Graph SpanningSubgraph(const Graph& g, const std::vector<Edge>& kept) {
  for (auto [u, v] : kept) {
    if (g.EdgeIndex(u, v) < 0) {
      throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} is not an edge of the parent graph");
    }
  }
  return Graph::Build(g.n(), kept, g.names());
}

}  // namespace eil
