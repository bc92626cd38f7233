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

#ifndef EIL_GRAPH_H_
#define EIL_GRAPH_H_

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "eil/vertex_set.h"

namespace eil {

using Edge = std::pair<int, int>;

// A finite simple graph on the vertices 0..n-1.
//
// Immutable once built. Edges are kept as (min, max) pairs sorted
// lexicographically, so equality of graphs is equality of (n, edges()).
// Optional display names do not take part in equality.
class Graph {
 public:
  // Empty graph on zero vertices.
  Graph() = default;

  // Throws InvalidArgument on an out-of-range endpoint, a loop, or
  // n > kMaxVertices. Duplicate pairs (in either orientation) collapse.
  static Graph Build(int n, const std::vector<Edge>& edges,
                     std::vector<std::string> names = {});

  // Named families, used throughout tests and corpora.
  static Graph Path(int n);
  static Graph Cycle(int n);
  static Graph Complete(int n);
  static Graph Edgeless(int n);
  // K_{1,leaves}; the center is vertex 0.
  static Graph Star(int leaves);

  int n() const { return n_; }
  int NumEdges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& names() const { return names_; }

  VertexSet Vertices() const { return VertexSet::Range(n_); }
  bool Adjacent(int u, int v) const { return adj_[u].Contains(v); }
  int Degree(int v) const { return adj_[v].Size(); }
  // Raw open neighborhood without range checks.
  VertexSet Adj(int v) const { return adj_[v]; }

  // Index of {u, v} in edges(), or -1.
  int EdgeIndex(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::array<VertexSet, kMaxVertices> adj_{};
  std::vector<std::string> names_;
};

// A subgraph together with the map back to parent labels:
// to_parent[i] is the parent label of vertex i of `graph`.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;

  // Parent label -> child label, or -1 when the vertex was removed.
  std::vector<int> FromParent(int parent_n) const;
  VertexSet PullBack(VertexSet child_set) const;
};

// N_G(u) when `closed` is false, N_G[u] otherwise.
VertexSet Neighborhood(const Graph& g, int u, bool closed = false);

// G \ U, relabeled densely in increasing parent order.
InducedSubgraph DeleteVertices(const Graph& g, VertexSet removed);

// G[A].
InducedSubgraph Induced(const Graph& g, VertexSet kept);

Graph Complement(const Graph& g);

// Vertex-disjoint union; the second graph's labels are shifted by first.n().
Graph DisjointUnion(const Graph& first, const Graph& second);

// True iff N_G(v) is a clique. Vertices of degree <= 1 are simplicial.
bool IsSimplicial(const Graph& g, int v);
// Same test restricted to the induced subgraph on `within` (v must be in it).
bool IsSimplicialIn(const Graph& g, VertexSet within, int v);

// True iff `s` is a clique of g.
bool IsClique(const Graph& g, VertexSet s);

// Components ordered by least vertex.
std::vector<VertexSet> ConnectedComponents(const Graph& g);
bool IsConnected(const Graph& g);

// Graph obtained from `g` by keeping only the listed edges (same vertex set).
Graph SpanningSubgraph(const Graph& g, const std::vector<Edge>& kept);

}  // namespace eil

#endif  // EIL_GRAPH_H_
