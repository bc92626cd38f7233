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

#include "eil/simplicial_complex.h"

#include <algorithm>
#include <bit>
#include <string>

#include "eil/error.h"

namespace eil {
namespace {

int IndexOf(const std::vector<VertexSet>& sorted, VertexSet face) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), face);
  if (it == sorted.end() || !(*it == face)) throw InternalError("boundary face missing");
  return static_cast<int>(it - sorted.begin());
}

// Rank of the boundary map from faces of size k+1 to faces of size k.
int BoundaryRank(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper,
                 const Field& field, bool dense) {
  if (lower.empty() || upper.empty()) return 0;
  const int64_t cells = static_cast<int64_t>(lower.size()) * static_cast<int64_t>(upper.size());
  if (field.rational || (dense && cells <= (int64_t{1} << 22))) {
    DenseMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    for (size_t c = 0; c < upper.size(); ++c) {
      int sign = 1;
      for (int v : upper[c]) {
        m.at(IndexOf(lower, upper[c] - VertexSet::Singleton(v)), static_cast<int>(c)) = sign;
        sign = -sign;
      }
    }
    return Rank(m, field);
  }
  std::vector<SparseColumn> cols(upper.size());
  for (size_t c = 0; c < upper.size(); ++c) {
    int sign = 1;
    for (int v : upper[c]) {
      cols[c].emplace_back(IndexOf(lower, upper[c] - VertexSet::Singleton(v)), sign);
      sign = -sign;
    }
  }
  return RankModPSparse(std::move(cols), field.p);
}

}  // namespace

SimplicialComplex SimplicialComplex::Void(VertexSet ground) {
  SimplicialComplex k;
  k.ground_ = ground;
  return k;
}

SimplicialComplex SimplicialComplex::Empty(VertexSet ground) {
  SimplicialComplex k;
  k.ground_ = ground;
  k.facets_.push_back(VertexSet());
  return k;
}

SimplicialComplex SimplicialComplex::FromFacets(VertexSet ground, std::vector<VertexSet> facets) {
  SimplicialComplex k;
  k.ground_ = ground;
  for (VertexSet f : facets) {
    if (!f.IsSubsetOf(ground)) throw InvalidArgument("facet outside the ground set");
  }
  std::sort(facets.begin(), facets.end(),
            [](VertexSet a, VertexSet b) { return a.Size() != b.Size() ? a.Size() > b.Size() : a < b; });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (VertexSet f : facets) {
    bool covered = false;
    for (VertexSet g : k.facets_) {
      if (f.IsSubsetOf(g)) {
        covered = true;
        break;
      }
    }
    if (!covered) k.facets_.push_back(f);
  }
  std::sort(k.facets_.begin(), k.facets_.end());
  return k;
}

bool SimplicialComplex::Contains(VertexSet face) const {
  for (VertexSet f : facets_)
    if (face.IsSubsetOf(f)) return true;
  return false;
}

int SimplicialComplex::Dimension() const {
  if (facets_.empty()) return -2;
  int d = -1;
  for (VertexSet f : facets_) d = std::max(d, f.Size() - 1);
  return d;
}

std::vector<VertexSet> SimplicialComplex::FacesOfSize(int k) const {
  std::vector<VertexSet> out;
  if (facets_.empty() || k < 0) return out;
  if (k == 0) return {VertexSet()};
  for (VertexSet f : facets_) {
    if (f.Size() < k) continue;
    std::vector<int> members = f.ToVector();
    const int n = static_cast<int>(members.size());
    // k-subsets of the facet by Gosper's hack over member positions.
    uint32_t pick = (uint32_t{1} << k) - 1;
    while (pick < (uint32_t{1} << n)) {
      VertexSet face;
      for (uint32_t x = pick; x; x &= x - 1) face.Insert(members[std::countr_zero(x)]);
      out.push_back(face);
      uint32_t low = pick & (~pick + 1);
      uint32_t ripple = pick + low;
      pick = (((ripple ^ pick) >> 2) / low) | ripple;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int64_t SimplicialComplex::NumFaces() const {
  int64_t total = 0;
  for (int k = 0; k <= Dimension() + 1; ++k) total += static_cast<int64_t>(FacesOfSize(k).size());
  return total;
}

std::optional<int> SimplicialComplex::ConeApex() const {
  if (facets_.empty()) return std::nullopt;
  VertexSet common = facets_.front();
  for (VertexSet f : facets_) common &= f;
  if (common.Empty()) return std::nullopt;
  return common.Min();
}

std::vector<int64_t> ReducedHomology(const SimplicialComplex& k, const Field& field,
                                     int64_t face_cap) {
  if (k.IsVoid()) return {};
  const int d = k.Dimension();
  if (k.ConeApex()) return std::vector<int64_t>(d + 2, 0);
  std::vector<std::vector<VertexSet>> faces(d + 2);
  int64_t total = 0;
  for (int s = 0; s <= d + 1; ++s) {
    faces[s] = k.FacesOfSize(s);
    total += static_cast<int64_t>(faces[s].size());
    if (total > face_cap) {
      throw CapExceeded("complex has more than " + std::to_string(face_cap) + " faces");
    }
  }
  const bool dense = total <= kDenseFaceThreshold;
  // rank_of[s]: rank of the boundary from size-s faces to size-(s-1) faces.
  std::vector<int64_t> rank_of(d + 3, 0);
  for (int s = 1; s <= d + 1; ++s) rank_of[s] = BoundaryRank(faces[s - 1], faces[s], field, dense);
  std::vector<int64_t> dims(d + 2, 0);
  for (int s = 0; s <= d + 1; ++s) {
    dims[s] = static_cast<int64_t>(faces[s].size()) - rank_of[s] - rank_of[s + 1];
  }
  return dims;
}

}  // namespace eil
