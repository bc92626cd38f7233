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

// Brute-force reference implementations. Exponential on purpose; they use
// nothing from the library beyond Graph and Monomial accessors.

#ifndef EIL_TESTS_ORACLES_H_
#define EIL_TESTS_ORACLES_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "eil/graph.h"
#include "eil/monomial.h"

namespace eil::oracle {

inline bool Adj(const Graph& g, int u, int v) { return g.Adjacent(u, v); }

// Largest set of pairwise disjoint edges (induced: also no edge joining two
// of them), by enumeration of edge subsets.
inline int Matching(const Graph& g, bool induced) {
  const auto& e = g.edges();
  const int m = static_cast<int>(e.size());
  int best = 0;
  for (uint32_t s = 0; s < (uint32_t{1} << m); ++s) {
    const int k = std::popcount(s);
    if (k <= best) continue;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!((s >> i) & 1)) continue;
      for (int j = i + 1; j < m && ok; ++j) {
        if (!((s >> j) & 1)) continue;
        const auto [a, b] = e[i];
        const auto [c, d] = e[j];
        if (a == c || a == d || b == c || b == d) ok = false;
        if (induced && (Adj(g, a, c) || Adj(g, a, d) || Adj(g, b, c) || Adj(g, b, d))) ok = false;
      }
    }
    if (ok) best = k;
  }
  return best;
}

// Whether the vertex subset `s` induces a cycle.
inline bool InducesCycle(const Graph& g, uint32_t s) {
  const int k = std::popcount(s);
  if (k < 3) return false;
  for (int v = 0; v < g.n(); ++v) {
    if (!((s >> v) & 1)) continue;
    int deg = 0;
    for (int u = 0; u < g.n(); ++u)
      if (((s >> u) & 1) && Adj(g, u, v)) ++deg;
    if (deg != 2) return false;
  }
  // 2-regular; connected iff a walk from the least vertex sees all of s.
  uint32_t seen = s & (~s + 1), frontier = seen;
  while (frontier) {
    uint32_t next = 0;
    for (int v = 0; v < g.n(); ++v) {
      if (!((frontier >> v) & 1)) continue;
      for (int u = 0; u < g.n(); ++u)
        if (((s >> u) & 1) && Adj(g, u, v)) next |= uint32_t{1} << u;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == s;
}

// Length of the longest induced cycle, 0 if none.
inline int LongestInducedCycle(const Graph& g) {
  int best = 0;
  for (uint32_t s = 1; s < (uint32_t{1} << g.n()); ++s)
    if (std::popcount(s) > best && InducesCycle(g, s)) best = std::popcount(s);
  return best;
}

inline Graph Complement(const Graph& g) {
  std::vector<Edge> e;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!Adj(g, u, v)) e.push_back({u, v});
  return Graph::Build(g.n(), e);
}

inline bool Chordal(const Graph& g) { return LongestInducedCycle(g) < 4; }
inline bool Cochordal(const Graph& g) { return Chordal(oracle::Complement(g)); }

inline bool InducedCycleAtLeast(const Graph& g, int min_len) {
  for (uint32_t s = 1; s < (uint32_t{1} << g.n()); ++s) {
    const int k = std::popcount(s);
    if (k >= min_len && InducesCycle(g, s)) return true;
  }
  return false;
}

inline bool WeaklyChordal(const Graph& g) {
  return !InducedCycleAtLeast(g, 5) && !InducedCycleAtLeast(oracle::Complement(g), 5);
}

// Some 2-coloring by enumeration.
inline bool Bipartite(const Graph& g) {
  for (uint32_t c = 0; c < (uint32_t{1} << g.n()); ++c) {
    bool ok = true;
    for (const Edge& e : g.edges())
      if (((c >> e.first) & 1) == ((c >> e.second) & 1)) ok = false;
    if (ok) return true;
  }
  return false;
}

inline bool Covers(const Graph& g, uint32_t c) {
  for (const Edge& e : g.edges())
    if (!((c >> e.first) & 1) && !((c >> e.second) & 1)) return false;
  return true;
}

// Minimal vertex covers as bitmasks, ascending.
inline std::vector<uint32_t> MinimalCovers(const Graph& g) {
  std::vector<uint32_t> out;
  for (uint32_t c = 0; c < (uint32_t{1} << g.n()); ++c) {
    if (!Covers(g, c)) continue;
    bool minimal = true;
    for (int v = 0; v < g.n() && minimal; ++v)
      if (((c >> v) & 1) && Covers(g, c & ~(uint32_t{1} << v))) minimal = false;
    if (minimal) out.push_back(c);
  }
  return out;
}

// Spanning subgraph on the edges selected by `mask` has chordal complement.
inline bool CochordalEdgeSubset(const Graph& g, uint32_t mask) {
  std::vector<Edge> e;
  for (int i = 0; i < g.NumEdges(); ++i)
    if ((mask >> i) & 1) e.push_back(g.edges()[i]);
  return Cochordal(Graph::Build(g.n(), e));
}

// Fewest co-chordal subgraphs whose edges cover E(G): all co-chordal edge
// subsets, then a shortest path over unions. Needs |E| <= 14 or so.
inline int CochordNumber(const Graph& g) {
  const int m = g.NumEdges();
  if (m == 0) return 0;
  const uint32_t full = (uint32_t{1} << m) - 1;
  std::vector<uint32_t> parts;
  for (uint32_t s = 1; s <= full; ++s)
    if (CochordalEdgeSubset(g, s)) parts.push_back(s);
  std::vector<int> dist(full + 1, -1);
  dist[0] = 0;
  std::vector<uint32_t> layer{0};
  for (int k = 1;; ++k) {
    std::vector<uint32_t> next;
    for (uint32_t s : layer)
      for (uint32_t p : parts) {
        const uint32_t t = s | p;
        if (dist[t] >= 0) continue;
        dist[t] = k;
        if (t == full) return k;
        next.push_back(t);
      }
    layer = std::move(next);
  }
}

// Membership in I(G)^(r) by the cover description.
inline bool InSymbolic(const std::vector<uint32_t>& covers, const std::vector<int>& e, int r) {
  for (uint32_t c : covers) {
    int s = 0;
    for (int v = 0; v < static_cast<int>(e.size()); ++v)
      if ((c >> v) & 1) s += e[v];
    if (s < r) return false;
  }
  return true;
}

// Every exponent vector in [0, bound]^n.
inline void ForEachInBox(int n, int bound, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> e(n, 0);
  while (true) {
    f(e);
    int i = 0;
    while (i < n && e[i] == bound) e[i++] = 0;
    if (i == n) return;
    ++e[i];
  }
}

using ExpSet = std::set<std::vector<int>>;

inline bool DividesVec(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline ExpSet Minimal(const ExpSet& s) {
  ExpSet out;
  for (const auto& a : s) {
    bool minimal = true;
    for (const auto& b : s)
      if (b != a && DividesVec(b, a)) minimal = false;
    if (minimal) out.insert(a);
  }
  return out;
}

// Minimal generators of I(G)^(r): members of the box [0, r]^n that are
// minimal under divisibility.
inline ExpSet SymbolicGens(const Graph& g, int r) {
  const auto covers = MinimalCovers(g);
  ExpSet members;
  ForEachInBox(g.n(), r, [&](const std::vector<int>& e) {
    if (InSymbolic(covers, e, r)) members.insert(e);
  });
  return Minimal(members);
}

// Minimal generators of I(G)^r: all products of r edges.
inline ExpSet PowerGens(const Graph& g, int r) {
  ExpSet cur{std::vector<int>(g.n(), 0)};
  for (int k = 0; k < r; ++k) {
    ExpSet next;
    for (const auto& e : cur)
      for (const Edge& ed : g.edges()) {
        auto f = e;
        ++f[ed.first];
        ++f[ed.second];
        next.insert(f);
      }
    cur = std::move(next);
  }
  return Minimal(cur);
}

inline std::vector<int> Exps(const Monomial& m) {
  std::vector<int> e(m.n());
  for (int i = 0; i < m.n(); ++i) e[i] = m[i];
  return e;
}

template <typename Ideal>
ExpSet GensOf(const Ideal& ideal) {
  ExpSet s;
  for (const Monomial& m : ideal.gens()) s.insert(Exps(m));
  return s;
}

inline bool InIdeal(const ExpSet& gens, const std::vector<int>& e) {
  for (const auto& g : gens)
    if (DividesVec(g, e)) return true;
  return false;
}

// Rank of a 0/1/-1 matrix over GF(p) by plain elimination.
inline int RankModP(std::vector<std::vector<int64_t>> a, int64_t p) {
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(a[0].size());
  auto inv = [p](int64_t x) {
    int64_t r = 1, b = x % p, k = p - 2;
    while (k) {
      if (k & 1) r = r * b % p;
      b = b * b % p;
      k >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (((a[r][c] % p) + p) % p) piv = r;
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    const int64_t iv = inv(((a[rank][c] % p) + p) % p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const int64_t f = ((a[r][c] % p) + p) % p * iv % p;
      if (!f) continue;
      for (int k = 0; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// dim of reduced homology H~_k(K) over GF(p) for the complex of subsets of
// `ground` satisfying `is_face` (closed under subsets).
inline std::map<int, int> ReducedHomology(uint32_t ground,
                                          const std::function<bool(uint32_t)>& is_face, int64_t p) {
  std::map<int, std::vector<uint32_t>> faces;  // by dimension, -1 for the empty face
  for (uint32_t s = ground;; s = (s - 1) & ground) {
    if (is_face(s)) faces[std::popcount(s) - 1].push_back(s);
    if (s == 0) break;
  }
  std::map<int, int> out;
  if (faces.empty()) return out;  // void complex
  auto boundary_rank = [&](int d) {  // rank of d -> d-1
    if (!faces.count(d) || !faces.count(d - 1)) return 0;
    const auto& hi = faces[d];
    const auto& lo = faces[d - 1];
    std::map<uint32_t, int> index;
    for (size_t i = 0; i < lo.size(); ++i) index[lo[i]] = static_cast<int>(i);
    std::vector<std::vector<int64_t>> m(lo.size(), std::vector<int64_t>(hi.size(), 0));
    for (size_t j = 0; j < hi.size(); ++j) {
      int sign = 1;
      for (int v = 0; v < 32; ++v) {
        if (!((hi[j] >> v) & 1)) continue;
        m[index[hi[j] & ~(uint32_t{1} << v)]][j] = sign;
        sign = -sign;
      }
    }
    return RankModP(m, p);
  };
  const int top = faces.rbegin()->first;
  for (int d = -1; d <= top; ++d) {
    const int n = faces.count(d) ? static_cast<int>(faces[d].size()) : 0;
    const int h = n - boundary_rank(d) - boundary_rank(d + 1);
    if (h) out[d] = h;
  }
  return out;
}

// reg(S/I) for a monomial ideal given by generators: polarize, then
// Hochster's formula over every subset of the polarized variables.
// Returns -1 for the unit ideal ("-infinity") and 0 for the zero ideal.
inline int Regularity(const ExpSet& gens, int n, int64_t p = 32003) {
  if (gens.empty()) return 0;
  for (const auto& g : gens)
    if (std::all_of(g.begin(), g.end(), [](int x) { return x == 0; })) return -1;
  std::vector<int> top(n, 0), offset(n, 0);
  for (const auto& g : gens)
    for (int i = 0; i < n; ++i) top[i] = std::max(top[i], g[i]);
  int vars = 0;
  for (int i = 0; i < n; ++i) {
    offset[i] = vars;
    vars += top[i];
  }
  std::vector<uint32_t> sq;
  for (const auto& g : gens) {
    uint32_t s = 0;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < g[i]; ++k) s |= uint32_t{1} << (offset[i] + k);
    sq.push_back(s);
  }
  auto is_face = [&](uint32_t f) {
    for (uint32_t s : sq)
      if ((s & f) == s) return false;
    return true;
  };
  int reg = 0;
  // beta_{i,sigma}(S/J) = dim H~_{|sigma|-i-1}(Delta_sigma); reg = max |sigma| - i.
  for (uint32_t sigma = 1; sigma < (uint32_t{1} << vars); ++sigma) {
    const int size = std::popcount(sigma);
    for (const auto& [k, dim] : ReducedHomology(sigma, is_face, p)) {
      const int i = size - k - 1;
      if (i >= 1 && dim > 0) reg = std::max(reg, size - i);
    }
  }
  return reg;
}

// Uniform random graph on n vertices.
inline Graph RandomGraph(int n, std::mt19937_64& rng, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return Graph::Build(n, e);
}

}  // namespace eil::oracle

#endif  // EIL_TESTS_ORACLES_H_
