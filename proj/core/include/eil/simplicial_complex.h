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

#ifndef EIL_SIMPLICIAL_COMPLEX_H_
#define EIL_SIMPLICIAL_COMPLEX_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "eil/field_rank.h"
#include "eil/vertex_set.h"

namespace eil {

inline constexpr int64_t kMaxComplexFaces = int64_t{1} << 22;
inline constexpr int64_t kDenseFaceThreshold = int64_t{1} << 14;

// A finite simplicial complex given by its facets.
//
// The void complex has no faces at all; the empty complex {∅} has exactly
// the empty face. Both have dimension < 0 but different reduced homology.
class SimplicialComplex {
 public:
  // The void complex.
  SimplicialComplex() = default;

  static SimplicialComplex Void(VertexSet ground = {});
  static SimplicialComplex Empty(VertexSet ground = {});
  // Keeps the inclusion-maximal sets. An empty list gives the void complex;
  // a list holding only ∅ gives the empty complex.
  static SimplicialComplex FromFacets(VertexSet ground, std::vector<VertexSet> facets);

  VertexSet ground() const { return ground_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool IsVoid() const { return facets_.empty(); }

  bool Contains(VertexSet face) const;
  // -1 for {∅}; -2 for the void complex.
  int Dimension() const;
  // Faces with exactly k vertices, ascending by bitmask.
  std::vector<VertexSet> FacesOfSize(int k) const;
  int64_t NumFaces() const;
  // A vertex lying in every facet, if any. Such a complex is acyclic.
  std::optional<int> ConeApex() const;

 private:
  VertexSet ground_;
  std::vector<VertexSet> facets_;
};

// dims[k + 1] = dim H~_k for k = -1 .. Dimension(). Empty for the void
// complex, whose reduced homology vanishes.
std::vector<int64_t> ReducedHomology(const SimplicialComplex& k, const Field& field,
                                     int64_t face_cap = kMaxComplexFaces);

// dims[k + 1], or 0 outside the stored range.
inline int64_t HomologyAt(const std::vector<int64_t>& dims, int k) {
  return (k + 1 >= 0 && k + 1 < static_cast<int>(dims.size())) ? dims[k + 1] : 0;
}

}  // namespace eil

#endif  // EIL_SIMPLICIAL_COMPLEX_H_
