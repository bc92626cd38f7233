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

// Graph corpora: exhaustive connected graphs up to isomorphism, seeded random
// H_T families, and a few fixed named instances.

#ifndef EIL_CORPUS_H_
#define EIL_CORPUS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eil/constructions.h"
#include "eil/graph.h"
#include "eil/graph_io.h"

namespace eil {

inline constexpr int kMaxExhaustiveVertices = 8;
inline constexpr int kMaxCorpusCount = 100'000;

enum class CorpusKind {
  kAllConnectedLe,      // every connected graph with 1..max_vertices vertices
  kAllConnectedEq,      // exactly max_vertices vertices
  kRandomHT,            // H_T over a random base
  kRandomUnicyclicHT,   // H_T over a random unicyclic base
  kRandomCameronWalker,
  kNamed,
};

// Restriction on the base graph of random H_T corpora.
enum class BaseFamily { kAny, kBipartite, kWeaklyChordalBipartite, kUnicyclic };

// Which attachments appear: star graphs only, star complete only, both, or
// unrestricted.
enum class AttachMode { kAny, kStarGraphs, kStarComplete, kMixed };

struct CorpusSpec {
  CorpusKind kind = CorpusKind::kAllConnectedLe;
  int min_vertices = 1;
  int max_vertices = 5;  // exhaustive size, or base size for HT kinds
  int total_max = 12;    // HT kinds: bound on |V(H_T)|
  uint64_t seed = 0;
  int count = 0;
  BaseFamily base = BaseFamily::kBipartite;
  AttachMode attach = AttachMode::kAny;
  bool t_vertex_cover = false;
  bool allow_empty_t = false;
  std::string name;  // kNamed

  // Throws InvalidArgument on bounds outside the module caps.
  void Validate() const;
  Json ToJson() const;
  static CorpusSpec FromJson(const Json& j);
};

struct CorpusInstance {
  std::string id;
  Graph graph;
  std::optional<HTSpec> ht;
  // Instances that are components of one larger graph share a group.
  std::string group;
};

std::vector<CorpusInstance> GenerateCorpus(const CorpusSpec& spec);

Json CorpusInstanceToJson(const CorpusInstance& inst);
CorpusInstance CorpusInstanceFromJson(const Json& j);

// Connected graphs on exactly n vertices, one per isomorphism class, each
// in canonical labeling, sorted by canonical code.
std::vector<Graph> ConnectedGraphs(int n);

// The canonical relabeling of g; isomorphic graphs map to equal graphs.
// Throws CapExceeded above kMaxExhaustiveVertices + 2 vertices.
Graph CanonicalForm(const Graph& g);
// Upper-triangle adjacency bits of the canonical form.
uint64_t CanonicalCode(const Graph& g);

// Names accepted by kNamed.
std::vector<std::string> NamedCorpora();

// mt19937_64 with portable bounded draws; the standard distributions are
// implementation-defined and would break byte-for-byte reproducibility.
class CorpusRng {
 public:
  explicit CorpusRng(uint64_t seed) : engine_(seed) {}
  // Uniform on [lo, hi].
  int Uniform(int lo, int hi);
  // True with probability num / den.
  bool Chance(int num, int den);

 private:
  std::mt19937_64 engine_;
};

}  // namespace eil

#endif  // EIL_CORPUS_H_
