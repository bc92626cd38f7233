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

// Stars of cliques, the H_T attachment, unicyclic decompositions and the
// explicit co-chordal covers of H_T over a bipartite base.

#ifndef EIL_CONSTRUCTIONS_H_
#define EIL_CONSTRUCTIONS_H_

#include <vector>

#include "eil/certificates.h"
#include "eil/graph.h"
#include "eil/graph_io.h"

namespace eil {

// K(x): complete graphs of the listed sizes sharing one center vertex.
struct StarOfCliquesSpec {
  std::vector<int> clique_sizes;

  // Every clique is an edge.
  bool IsStarGraph() const;
  // Some clique has at least three vertices.
  bool IsStarComplete() const { return !IsStarGraph(); }
  // 1 + sum(size - 1).
  int VertexCount() const;
  void Validate() const;
};

struct StarOfCliques {
  Graph graph;
  int center = 0;
};

// Center is vertex 0; clique k takes the next size_k - 1 labels.
StarOfCliques BuildStarOfCliques(const StarOfCliquesSpec& spec);

struct Attachment {
  int vertex = 0;
  StarOfCliquesSpec star;
};

struct HTSpec {
  Graph base;
  std::vector<Attachment> attachments;

  // Number of star-graph attachments.
  int p() const;
  // Number of attachments.
  int q() const { return static_cast<int>(attachments.size()); }
  VertexSet T() const;
  int TotalVertices() const;
  // Throws InvalidArgument on a bad vertex, a repeat, or a bad clique size.
  void Validate() const;
};

// Where each attached clique landed in H_T. cliques[k] includes the center.
struct AttachmentLayout {
  int vertex = 0;
  bool star_graph = true;
  std::vector<VertexSet> cliques;
  VertexSet vertices;  // V(K(x)), center included
};

struct HTGraph {
  Graph graph;
  std::vector<AttachmentLayout> layout;
};

// Base vertices keep their labels; new vertices follow in attachment order,
// cliques in listed order.
HTGraph AttachHT(const HTSpec& spec);

// Sum of |V(K(x))| over the star-complete attachments.
int Kappa(const HTSpec& spec);

Json HTSpecToJson(const HTSpec& spec);
HTSpec HTSpecFromJson(const Json& j);

struct UnicyclicDecomposition {
  std::vector<int> cycle;          // cyclic order, least label first
  std::vector<int> attach_points;  // increasing
  std::vector<VertexSet> parts;    // parts[j] contains attach_points[j]
  VertexSet gamma;
  std::vector<VertexSet> h_parts;  // parts[j] minus N[attach_points[j]]
};

// For a connected graph with exactly one cycle (|E| = |V|).
UnicyclicDecomposition DecomposeUnicyclic(const Graph& g);
// For H_T over a unicyclic H: the cycle of H, with chordal parts hanging off it.
UnicyclicDecomposition DecomposeUnicyclic(const HTSpec& spec);
// With the cycle given explicitly. Throws unless every part meets the cycle
// in exactly one vertex and induces a chordal graph.
UnicyclicDecomposition DecomposeUnicyclic(const Graph& g, const std::vector<int>& cycle);

Json UnicyclicDecompositionToJson(const UnicyclicDecomposition& d);

enum class CoverCase { kAllStarGraphs, kAllStarComplete, kMixed };

struct HTCover {
  CoChordalCover cover;
  CoverCase which = CoverCase::kAllStarGraphs;
  // Edges of H lying inside the star-side piece but missed by its lift.
  // They are covered by the star-complete side instead.
  std::vector<Edge> ambiguous_edges;
};

// Explicit co-chordal cover of H_T when H is bipartite and T covers E(H).
// Throws InvalidArgument on violated preconditions, CapExceeded if the
// star-side core is too large for exact search, and InternalError if a part
// fails validation.
HTCover ConstructCochordalCoverHT(const HTSpec& spec);

const char* CoverCaseName(CoverCase c);

}  // namespace eil

#endif  // EIL_CONSTRUCTIONS_H_
