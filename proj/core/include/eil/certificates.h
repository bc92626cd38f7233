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

// Witness objects for graph invariants.
//
// Every invariant answer ships with one of these. Validators here are written
// against the definitions only and share no code with the searches that
// produce the witnesses.

#ifndef EIL_CERTIFICATES_H_
#define EIL_CERTIFICATES_H_

#include <string>
#include <vector>

#include "eil/graph.h"
#include "eil/graph_io.h"

namespace eil {

enum class MatchingKind { kPlain, kInduced };

struct MatchingCertificate {
  MatchingKind kind = MatchingKind::kPlain;
  std::vector<Edge> edges;
};

// Parts E_1..E_k covering E(G); each part has chordal complement on the
// vertices it touches.
struct CoChordalCover {
  std::vector<std::vector<Edge>> parts;
};

// A perfect elimination order.
struct EliminationOrder {
  std::vector<int> ordering;
};

// Two independent sets partitioning V(G).
struct Bipartition {
  VertexSet left;
  VertexSet right;
};

// All minimal vertex covers, sorted by bitmask.
struct VertexCoverList {
  std::vector<VertexSet> covers;
};

// Validators. On failure they return false and, when `why` is non-null,
// describe the first violated condition.
bool ValidateMatching(const Graph& g, const MatchingCertificate& cert,
                      std::string* why = nullptr);
bool ValidateCoChordalCover(const Graph& g, const CoChordalCover& cover,
                            std::string* why = nullptr);
bool ValidateEliminationOrder(const Graph& g, const EliminationOrder& order,
                              std::string* why = nullptr);
// `cycle` lists the cycle's vertices in order; checks it is an induced cycle
// of length at least `min_length`.
bool ValidateInducedCycle(const Graph& g, const std::vector<int>& cycle,
                          int min_length, std::string* why = nullptr);
bool ValidateBipartition(const Graph& g, const Bipartition& parts,
                         std::string* why = nullptr);
// Closed walk of odd length with consecutive vertices adjacent and no repeats.
bool ValidateOddCycle(const Graph& g, const std::vector<int>& cycle,
                      std::string* why = nullptr);
// Checks minimality, covering, sortedness and completeness (the last by
// enumeration of all 2^n subsets, so n must be small).
bool ValidateVertexCoverList(const Graph& g, const VertexCoverList& list,
                             std::string* why = nullptr);

// JSON forms carry a "kind" tag: "matching", "induced_matching",
// "cochordal_cover", "elimination_order", "bipartition", "vertex_covers".
Json ToJson(const MatchingCertificate& cert);
Json ToJson(const CoChordalCover& cover);
Json ToJson(const EliminationOrder& order);
Json ToJson(const Bipartition& parts);
Json ToJson(const VertexCoverList& list);

MatchingCertificate MatchingFromJson(const Json& j);
CoChordalCover CoChordalCoverFromJson(const Json& j);
EliminationOrder EliminationOrderFromJson(const Json& j);
Bipartition BipartitionFromJson(const Json& j);
VertexCoverList VertexCoverListFromJson(const Json& j);

// Re-validates any tagged certificate document against `g`.
bool ValidateCertificateJson(const Graph& g, const Json& j,
                             std::string* why = nullptr);

}  // namespace eil

#endif  // EIL_CERTIFICATES_H_
