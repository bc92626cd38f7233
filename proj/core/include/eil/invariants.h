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

// Exact combinatorial invariants and class predicates.
//
// All searches are exponential and sized for graphs of at most kMaxVertices
// vertices. Each result carries a witness that the validators in
// certificates.h can re-check.

#ifndef EIL_INVARIANTS_H_
#define EIL_INVARIANTS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "eil/certificates.h"
#include "eil/error.h"
#include "eil/graph.h"

namespace eil {

struct MatchingResult {
  int count = 0;
  MatchingCertificate certificate;
};

// mat(G).
MatchingResult MatchingNumber(const Graph& g);
// nu(G); 0 on edgeless graphs.
MatchingResult InducedMatchingNumber(const Graph& g);

struct ChordalityResult {
  bool chordal = false;
  EliminationOrder order;           // set when chordal
  std::vector<int> induced_cycle;   // length >= 4, set when not chordal
};

ChordalityResult IsChordal(const Graph& g);
bool IsCochordal(const Graph& g);

// Fast chordality test on a raw adjacency table restricted to `verts`.
bool IsChordalAdjacency(const std::array<VertexSet, kMaxVertices>& adj,
                        VertexSet verts);

struct BipartiteResult {
  bool bipartite = false;
  Bipartition parts;            // set when bipartite
  std::vector<int> odd_cycle;   // set when not bipartite
};

BipartiteResult IsBipartite(const Graph& g);

// Some induced cycle of length >= min_length, found by exhaustive search of
// induced paths; nullopt when none exists.
std::optional<std::vector<int>> FindInducedCycle(const Graph& g, int min_length);

// No induced cycle of length >= 5 in G or in its complement.
bool IsWeaklyChordal(const Graph& g);

// nu(G) == mat(G).
bool IsCameronWalker(const Graph& g);

bool IsVertexCover(const Graph& g, VertexSet c);

// Complete list of minimal vertex covers, ascending by bitmask.
VertexCoverList MinimalVertexCovers(const Graph& g);

struct CochordOptions {
  // Search nodes shared by part enumeration and the covering search.
  int64_t node_budget = 10'000'000;
  // A known lower bound (e.g. nu(G)); computed when negative.
  int lower_bound_hint = -1;
  Deadline deadline;
};

struct CochordResult {
  // Exact when lower == upper.
  int lower = 0;
  int upper = 0;
  bool exact = false;
  // Present whenever some cover of size `upper` is known explicitly.
  std::optional<CoChordalCover> cover;
  int64_t nodes = 0;
  int candidate_parts = 0;

  int value() const { return upper; }
};

// cochord(G). On budget exhaustion returns an interval with exact == false.
CochordResult CochordalCoverNumber(const Graph& g, const CochordOptions& options = {});

// True iff the spanning subgraph with the given edges is co-chordal.
bool IsCochordalEdgeSet(const Graph& g, const std::vector<Edge>& edges);

}  // namespace eil

#endif  // EIL_INVARIANTS_H_
