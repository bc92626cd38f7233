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

// Exact co-chordal cover number.
//
// Parts of a cover may overlap, and co-chordality is not inherited by
// edge-subsets (2K_2 sits inside C_4), so the search cannot just color edges.
// Instead:
//   1. enumerate every co-chordal edge set that no single extra edge keeps
//      co-chordal ("locally maximal"); every co-chordal set lies inside one;
//   2. solve set cover over those parts by iterative deepening from a lower
//      bound (nu(G) by default).
// Step 1 prunes on induced 2K_2, which no co-chordal graph contains.

#include <algorithm>
#include <bit>
#include <vector>

#include "eil/invariants.h"

namespace eil {
namespace {

constexpr int kMaxCoverEdges = 64;
constexpr size_t kDominanceFilterLimit = 6000;

class BudgetExhausted {};

class CoverSearch {
 public:
  CoverSearch(const Graph& g, const CochordOptions& options)
      : g_(g), options_(options), m_(g.NumEdges()) {
    full_ = m_ == 64 ? ~uint64_t{0} : ((uint64_t{1} << m_) - 1);
    // Cross edges between every pair of vertex-disjoint edges.
    cross_.assign(m_ * m_, 0);
    for (int i = 0; i < m_; ++i) {
      for (int j = i + 1; j < m_; ++j) {
        auto [a, b] = g.edges()[i];
        auto [c, d] = g.edges()[j];
        if (a == c || a == d || b == c || b == d) continue;
        uint64_t x = 0;
        for (auto [p, q] : {Edge(a, c), Edge(a, d), Edge(b, c), Edge(b, d)}) {
          int idx = g.EdgeIndex(p, q);
          if (idx >= 0) x |= uint64_t{1} << idx;
        }
        cross_[i * m_ + j] = cross_[j * m_ + i] = x;
      }
    }
  }

  uint64_t full() const { return full_; }
  int64_t nodes() const { return nodes_; }

  bool Cochordal(uint64_t mask) const {
    std::array<VertexSet, kMaxVertices> part{};
    VertexSet touched;
    for (uint64_t x = mask; x; x &= x - 1) {
      auto [u, v] = g_.edges()[std::countr_zero(x)];
      part[u].Insert(v);
      part[v].Insert(u);
      touched.Insert(u);
      touched.Insert(v);
    }
    std::array<VertexSet, kMaxVertices> comp{};
    for (int u : touched) comp[u] = touched - part[u] - VertexSet::Singleton(u);
    return IsChordalAdjacency(comp, touched);
  }

  // Fills parts_; throws BudgetExhausted.
  void EnumerateParts() {
    Enumerate(0, 0);
    std::sort(parts_.begin(), parts_.end());
    parts_.erase(std::unique(parts_.begin(), parts_.end()), parts_.end());
    if (parts_.size() <= kDominanceFilterLimit) {
      std::vector<uint64_t> by_size = parts_;
      std::stable_sort(by_size.begin(), by_size.end(), [](uint64_t a, uint64_t b) {
        return std::popcount(a) > std::popcount(b);
      });
      std::vector<uint64_t> kept;
      for (uint64_t p : by_size) {
        bool dominated = false;
        for (uint64_t q : kept) {
          if ((p & ~q) == 0) {
            dominated = true;
            break;
          }
        }
        if (!dominated) kept.push_back(p);
      }
      parts_ = std::move(kept);
    }
    containing_.assign(m_, {});
    for (size_t p = 0; p < parts_.size(); ++p)
      for (uint64_t x = parts_[p]; x; x &= x - 1)
        containing_[std::countr_zero(x)].push_back(static_cast<int>(p));
    for (auto& list : containing_) {
      std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
        return std::popcount(parts_[a]) > std::popcount(parts_[b]);
      });
    }
  }

  const std::vector<uint64_t>& parts() const { return parts_; }

  std::vector<uint64_t> GreedyCover() const {
    std::vector<uint64_t> chosen;
    uint64_t covered = 0;
    while (covered != full_) {
      uint64_t best = 0;
      int gain = -1;
      for (uint64_t p : parts_) {
        int gp = std::popcount(p & ~covered);
        if (gp > gain) {
          gain = gp;
          best = p;
        }
      }
      if (gain <= 0) throw InternalError("co-chordal parts fail to cover E(G)");
      chosen.push_back(best);
      covered |= best;
    }
    return chosen;
  }

  // Exact: is there a cover with at most k parts? Throws BudgetExhausted.
  bool CoverWith(int k, std::vector<uint64_t>* out) {
    max_part_ = 0;
    for (uint64_t p : parts_) max_part_ = std::max(max_part_, std::popcount(p));
    chosen_.clear();
    if (Cover(0, k)) {
      *out = chosen_;
      return true;
    }
    return false;
  }

 private:

  void Tick() {
    if (++nodes_ > options_.node_budget) throw BudgetExhausted();
    if ((nodes_ & 0xFFF) == 0 && options_.deadline.Expired()) throw BudgetExhausted();
  }

  bool Disjoint(int i, int j) const {
    auto [a, b] = g_.edges()[i];
    auto [c, d] = g_.edges()[j];
    return a != c && a != d && b != c && b != d;
  }

  // Some pair of chosen, vertex-disjoint edges has no cross edge chosen and
  // none still undecided (indices >= next).
  bool HasForcedInduced2K2(uint64_t in, int next) const {
    const uint64_t undecided = next >= 64 ? 0 : (full_ & ~((uint64_t{1} << next) - 1));
    for (uint64_t x = in; x; x &= x - 1) {
      int i = std::countr_zero(x);
      for (uint64_t y = x & (x - 1); y; y &= y - 1) {
        int j = std::countr_zero(y);
        if (!Disjoint(i, j)) continue;
        uint64_t cr = cross_[i * m_ + j];
        if ((cr & in) == 0 && (cr & undecided) == 0) return true;
      }
    }
    return false;
  }

  void Enumerate(int i, uint64_t in) {
    Tick();
    if (i == m_) {
      if (in == 0 || !Cochordal(in)) return;
      for (uint64_t out = full_ & ~in; out; out &= out - 1) {
        Tick();
        if (Cochordal(in | (out & (~out + 1)))) return;  // not locally maximal
      }
      parts_.push_back(in);
      return;
    }
    const uint64_t bit = uint64_t{1} << i;
    if (!HasForcedInduced2K2(in | bit, i + 1)) Enumerate(i + 1, in | bit);
    if (!HasForcedInduced2K2(in, i + 1)) Enumerate(i + 1, in);
  }

  bool Cover(uint64_t covered, int left) {
    Tick();
    if (covered == full_) return true;
    if (left == 0) return false;
    const int uncovered = std::popcount(full_ & ~covered);
    if (uncovered > left * max_part_) return false;
    // Branch on the uncovered edge with the fewest candidate parts.
    int pick = -1;
    size_t fewest = SIZE_MAX;
    for (uint64_t x = full_ & ~covered; x; x &= x - 1) {
      int e = std::countr_zero(x);
      if (containing_[e].size() < fewest) {
        fewest = containing_[e].size();
        pick = e;
      }
    }
    for (int p : containing_[pick]) {
      chosen_.push_back(parts_[p]);
      if (Cover(covered | parts_[p], left - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  const CochordOptions& options_;
  const int m_;
  uint64_t full_ = 0;
  std::vector<uint64_t> cross_;
  std::vector<uint64_t> parts_;
  std::vector<std::vector<int>> containing_;
  std::vector<uint64_t> chosen_;
  int max_part_ = 0;
  int64_t nodes_ = 0;
};

CoChordalCover ToCover(const Graph& g, const std::vector<uint64_t>& masks) {
  CoChordalCover cover;
  for (uint64_t mask : masks) {
    std::vector<Edge> part;
    for (uint64_t x = mask; x; x &= x - 1) part.push_back(g.edges()[std::countr_zero(x)]);
    cover.parts.push_back(std::move(part));
  }
  return cover;
}

}  // namespace

bool IsCochordalEdgeSet(const Graph& g, const std::vector<Edge>& edges) {
  std::array<VertexSet, kMaxVertices> part{};
  VertexSet touched;
  for (auto [u, v] : edges) {
    if (g.EdgeIndex(u, v) < 0) throw InvalidArgument("pair is not an edge of G");
    part[u].Insert(v);
    part[v].Insert(u);
    touched.Insert(u);
    touched.Insert(v);
  }
  std::array<VertexSet, kMaxVertices> comp{};
  for (int u : touched) comp[u] = touched - part[u] - VertexSet::Singleton(u);
  return IsChordalAdjacency(comp, touched);
}

CochordResult CochordalCoverNumber(const Graph& g, const CochordOptions& options) {
  CochordResult r;
  if (g.NumEdges() == 0) {
    r.exact = true;
    r.cover = CoChordalCover{};
    return r;
  }
  int lower = options.lower_bound_hint >= 0 ? options.lower_bound_hint
                                             : InducedMatchingNumber(g).count;
  lower = std::max(lower, 1);
  if (IsCochordalEdgeSet(g, g.edges())) {
    r.lower = r.upper = 1;
    r.exact = true;
    r.cover = CoChordalCover{{g.edges()}};
    return r;
  }
  lower = std::max(lower, 2);
  if (g.NumEdges() > kMaxCoverEdges) {
    throw CapExceeded("co-chordal cover search supports at most 64 edges");
  }

  CoverSearch search(g, options);
  try {
    search.EnumerateParts();
  } catch (const BudgetExhausted&) {
    r.lower = lower;
    r.upper = std::max(lower, MatchingNumber(g).count);
    r.exact = r.lower == r.upper;
    r.nodes = search.nodes();
    return r;
  }
  r.candidate_parts = static_cast<int>(search.parts().size());
  std::vector<uint64_t> best = search.GreedyCover();
  // cochord <= mat, though without a witness at that size.
  int upper = static_cast<int>(best.size());
  r.cover = ToCover(g, best);
  int k = lower;
  try {
    for (; k < upper; ++k) {
      std::vector<uint64_t> found;
      if (search.CoverWith(k, &found)) {
        best = found;
        upper = k;
        r.cover = ToCover(g, best);
        break;
      }
    }
  } catch (const BudgetExhausted&) {
    r.lower = k;
    r.upper = upper;
    r.exact = false;
    r.nodes = search.nodes();
    return r;
  }
  r.lower = r.upper = upper;
  r.exact = true;
  r.nodes = search.nodes();
  return r;
}

}  // namespace eil
