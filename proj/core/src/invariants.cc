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

#include "eil/invariants.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace eil {
namespace {

// Fixed-width bitset over edge indices; K_24 has 276 edges.
constexpr int kEdgeWords = 5;
struct EdgeBits {
  std::array<uint64_t, kEdgeWords> w{};

  void Set(int i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
  void Reset(int i) { w[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool Test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  bool Empty() const {
    for (uint64_t x : w)
      if (x) return false;
    return true;
  }
  int Count() const {
    int c = 0;
    for (uint64_t x : w) c += std::popcount(x);
    return c;
  }
  int First() const {
    for (int k = 0; k < kEdgeWords; ++k)
      if (w[k]) return k * 64 + std::countr_zero(w[k]);
    return -1;
  }
  EdgeBits AndNot(const EdgeBits& o) const {
    EdgeBits r;
    for (int k = 0; k < kEdgeWords; ++k) r.w[k] = w[k] & ~o.w[k];
    return r;
  }
};

// Branch and bound for a maximum independent set in the conflict graph whose
// vertices are (reordered) edges of G.
class InducedMatchingSearch {
 public:
  InducedMatchingSearch(const Graph& g, std::vector<Edge> order)
      : g_(g), order_(std::move(order)) {
    const int m = static_cast<int>(order_.size());
    conflict_.resize(m);
    for (int i = 0; i < m; ++i) {
      auto [a, b] = order_[i];
      VertexSet near = g.Adj(a) | g.Adj(b) | VertexSet{a, b};
      for (int j = 0; j < m; ++j) {
        auto [c, d] = order_[j];
        if (near.Contains(c) || near.Contains(d)) conflict_[i].Set(j);
      }
    }
  }

  std::vector<Edge> Run() {
    EdgeBits all;
    for (int i = 0; i < static_cast<int>(order_.size()); ++i) all.Set(i);
    Recurse(all);
    std::vector<Edge> out;
    for (int i : best_) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int UpperBound(const EdgeBits& cand) const {
    VertexSet touched;
    for (int k = 0; k < kEdgeWords; ++k) {
      for (uint64_t x = cand.w[k]; x; x &= x - 1) {
        auto [a, b] = order_[k * 64 + std::countr_zero(x)];
        touched.Insert(a);
        touched.Insert(b);
      }
    }
    return std::min(cand.Count(), touched.Size() / 2);
  }

  void Recurse(const EdgeBits& cand) {
    if (cand.Empty()) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    if (static_cast<int>(current_.size()) + UpperBound(cand) <= static_cast<int>(best_.size())) {
      return;
    }
    int e = cand.First();
    current_.push_back(e);
    Recurse(cand.AndNot(conflict_[e]));
    current_.pop_back();
    EdgeBits without = cand;
    without.Reset(e);
    Recurse(without);
  }

  const Graph& g_;
  std::vector<Edge> order_;
  std::vector<EdgeBits> conflict_;
  std::vector<int> current_;
  std::vector<int> best_;
};

// Edges by decreasing degree sum, ties in canonical order.
std::vector<Edge> DegreeSumOrder(const Graph& g) {
  std::vector<Edge> order = g.edges();
  std::stable_sort(order.begin(), order.end(), [&](Edge x, Edge y) {
    return g.Degree(x.first) + g.Degree(x.second) >
           g.Degree(y.first) + g.Degree(y.second);
  });
  return order;
}

class MatchingSearch {
 public:
  explicit MatchingSearch(const Graph& g) : g_(g) {}

  std::vector<Edge> Run() {
    Recurse(g_.Vertices());
    std::vector<Edge> out = best_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void Recurse(VertexSet s) {
    // Drop vertices with no partner left.
    VertexSet live;
    for (int v : s)
      if ((g_.Adj(v) & s).Size() > 0) live.Insert(v);
    if (current_.size() > best_.size()) best_ = current_;
    if (current_.size() + live.Size() / 2 <= best_.size()) return;
    int v = live.Min();
    VertexSet partners = g_.Adj(v) & live;
    // Try low-degree partners first.
    std::vector<int> order = partners.ToVector();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return (g_.Adj(a) & live).Size() < (g_.Adj(b) & live).Size();
    });
    for (int u : order) {
      current_.emplace_back(std::min(u, v), std::max(u, v));
      Recurse(live - VertexSet{u, v});
      current_.pop_back();
    }
    Recurse(live - VertexSet::Singleton(v));
  }

  const Graph& g_;
  std::vector<Edge> current_;
  std::vector<Edge> best_;
};

// Peels simplicial vertices (least label first); returns the peel order and
// the set left when peeling gets stuck.
std::pair<std::vector<int>, VertexSet> PeelSimplicial(
    const std::array<VertexSet, kMaxVertices>& adj, VertexSet verts) {
  std::vector<int> order;
  VertexSet left = verts;
  bool progress = true;
  while (!left.Empty() && progress) {
    progress = false;
    for (int v : left) {
      VertexSet nb = adj[v] & left;
      bool clique = true;
      for (int u : nb) {
        if (!(nb - VertexSet::Singleton(u)).IsSubsetOf(adj[u])) {
          clique = false;
          break;
        }
      }
      if (clique) {
        order.push_back(v);
        left.Erase(v);
        progress = true;
        break;
      }
    }
  }
  return {order, left};
}

}  // namespace

MatchingResult MatchingNumber(const Graph& g) {
  MatchingResult r;
  r.certificate.kind = MatchingKind::kPlain;
  r.certificate.edges = MatchingSearch(g).Run();
  r.count = static_cast<int>(r.certificate.edges.size());
  return r;
}

MatchingResult InducedMatchingNumber(const Graph& g) {
  MatchingResult r;
  r.certificate.kind = MatchingKind::kInduced;
  r.certificate.edges = InducedMatchingSearch(g, DegreeSumOrder(g)).Run();
  r.count = static_cast<int>(r.certificate.edges.size());
  return r;
}

bool IsChordalAdjacency(const std::array<VertexSet, kMaxVertices>& adj,
                        VertexSet verts) {
  return PeelSimplicial(adj, verts).second.Empty();
}

namespace {

// Extends the induced path `path` (whose first vertex is its least vertex s)
// inside `allowed`. `forbidden` holds neighbors of interior path vertices.
bool ExtendInducedPath(const Graph& g, VertexSet allowed, int min_length,
                       std::vector<int>& path, VertexSet on_path,
                       VertexSet forbidden) {
  const int s = path.front();
  const int last = path.back();
  for (int w : g.Adj(last) & allowed) {
    if (on_path.Contains(w) || forbidden.Contains(w)) continue;
    if (g.Adj(s).Contains(w)) {
      // w closes the cycle; it cannot serve as an interior vertex.
      if (static_cast<int>(path.size()) + 1 >= min_length) {
        path.push_back(w);
        return true;
      }
      continue;
    }
    VertexSet next_forbidden = forbidden;
    if (path.size() >= 2) next_forbidden |= g.Adj(last);
    path.push_back(w);
    if (ExtendInducedPath(g, allowed, min_length, path,
                          on_path | VertexSet::Singleton(w), next_forbidden)) {
      return true;
    }
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> FindInducedCycle(const Graph& g, int min_length) {
  min_length = std::max(min_length, 3);
  for (int s = 0; s < g.n(); ++s) {
    // Cycles are found from their least vertex.
    VertexSet allowed = g.Vertices() - VertexSet::Range(s + 1);
    for (int first : g.Adj(s) & allowed) {
      std::vector<int> path = {s, first};
      if (ExtendInducedPath(g, allowed, min_length, path, VertexSet{s, first},
                            VertexSet())) {
        return path;
      }
    }
  }
  return std::nullopt;
}

ChordalityResult IsChordal(const Graph& g) {
  std::array<VertexSet, kMaxVertices> adj{};
  for (int v = 0; v < g.n(); ++v) adj[v] = g.Adj(v);
  auto [order, stuck] = PeelSimplicial(adj, g.Vertices());
  ChordalityResult r;
  if (stuck.Empty()) {
    r.chordal = true;
    r.order.ordering = std::move(order);
    return r;
  }
  InducedSubgraph core = Induced(g, stuck);
  auto cycle = FindInducedCycle(core.graph, 4);
  if (!cycle) throw InternalError("non-chordal remainder without an induced long cycle");
  for (int& v : *cycle) v = core.to_parent[v];
  r.induced_cycle = std::move(*cycle);
  return r;
}

bool IsCochordal(const Graph& g) { return IsChordal(Complement(g)).chordal; }

BipartiteResult IsBipartite(const Graph& g) {
  std::vector<int> color(g.n(), -1), parent(g.n(), -1), depth(g.n(), 0);
  BipartiteResult r;
  for (int root = 0; root < g.n(); ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::vector<int> queue = {root};
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : g.Adj(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          // Walk both tree paths up to their meeting point.
          std::vector<int> left = {u}, right = {v};
          int a = u, b = v;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();  // meeting point already on `left`
          std::reverse(right.begin(), right.end());
          // left: u .. lca, right: children .. v  -> cycle lca..u? build u->lca->v
          std::vector<int> cycle = left;
          cycle.insert(cycle.end(), right.begin(), right.end());
          r.bipartite = false;
          r.odd_cycle = std::move(cycle);
          return r;
        }
      }
    }
  }
  r.bipartite = true;
  for (int v = 0; v < g.n(); ++v) {
    if (color[v] == 0) r.parts.left.Insert(v);
    else r.parts.right.Insert(v);
  }
  return r;
}

bool IsWeaklyChordal(const Graph& g) {
  return !FindInducedCycle(g, 5).has_value() &&
         !FindInducedCycle(Complement(g), 5).has_value();
}

bool IsCameronWalker(const Graph& g) {
  return InducedMatchingNumber(g).count == MatchingNumber(g).count;
}

bool IsVertexCover(const Graph& g, VertexSet c) {
  if (!c.IsSubsetOf(g.Vertices())) {
    throw InvalidArgument("vertex set " + c.ToString() + " not contained in V(G)");
  }
  for (auto [u, v] : g.edges())
    if (!c.Contains(u) && !c.Contains(v)) return false;
  return true;
}

VertexCoverList MinimalVertexCovers(const Graph& g) {
  // Minimal covers are complements of maximal independent sets, which are the
  // maximal cliques of the complement (Bron-Kerbosch with pivoting).
  std::array<VertexSet, kMaxVertices> co{};
  for (int v = 0; v < g.n(); ++v)
    co[v] = g.Vertices() - g.Adj(v) - VertexSet::Singleton(v);
  VertexCoverList out;
  std::function<void(VertexSet, VertexSet, VertexSet)> bk =
      [&](VertexSet r, VertexSet p, VertexSet x) {
        if (p.Empty() && x.Empty()) {
          out.covers.push_back(g.Vertices() - r);
          return;
        }
        int pivot = (p | x).Min();
        int best = -1;
        for (int u : p | x) {
          int c = (p & co[u]).Size();
          if (c > best) {
            best = c;
            pivot = u;
          }
        }
        for (int v : p - co[pivot]) {
          bk(r | VertexSet::Singleton(v), p & co[v], x & co[v]);
          p.Erase(v);
          x.Insert(v);
        }
      };
  bk(VertexSet(), g.Vertices(), VertexSet());
  std::sort(out.covers.begin(), out.covers.end());
  return out;
}

}  // namespace eil
