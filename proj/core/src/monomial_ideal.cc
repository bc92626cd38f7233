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

#include "eil/monomial_ideal.h"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "eil/error.h"

namespace eil {
namespace {

void CheckPowerCaps(int n, int r) {
  if (r < 1) throw InvalidArgument("power exponent must be >= 1");
  if (r > kMaxPowerExponent) {
    throw CapExceeded("power exponent " + std::to_string(r) + " above cap " +
                      std::to_string(kMaxPowerExponent));
  }
  if (n > kMaxPowerVariables) {
    throw CapExceeded("power of an ideal in " + std::to_string(n) +
                      " variables (cap " + std::to_string(kMaxPowerVariables) + ")");
  }
}

void CheckSameRing(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n() != b.n()) throw InvalidArgument("ideals live in different rings");
}

void CheckRing(const MonomialIdeal& a, const Monomial& m) {
  if (a.n() != m.n()) throw InvalidArgument("monomial and ideal live in different rings");
}

// Box search for minimal generators of the intersection of P_C^r.
class SymbolicBox {
 public:
  SymbolicBox(int n, const std::vector<VertexSet>& covers, int r)
      : n_(n), r_(r), covers_(covers), e_(n) {
    sums_.assign(covers_.size(), 0);
    containing_.assign(n_, {});
    ending_at_.assign(n_, {});
    settled_at_.assign(n_ + 1, {});
    for (size_t c = 0; c < covers_.size(); ++c) {
      int last = -1;
      for (int v : covers_[c]) {
        containing_[v].push_back(static_cast<int>(c));
        last = v;
      }
      ending_at_[last].push_back(static_cast<int>(c));
    }
    // A variable's tightness is decided once every cover through it is full.
    for (int v = 0; v < n_; ++v) {
      int settled = -1;
      for (int c : containing_[v]) settled = std::max(settled, Last(covers_[c]));
      if (settled >= 0) settled_at_[settled].push_back(v);
    }
  }

  std::vector<Monomial> Run() {
    Dfs(0);
    return std::move(out_);
  }

 private:
  static int Last(VertexSet s) { return 31 - std::countl_zero(s.bits()); }

  bool Tight(int v) const {
    for (int c : containing_[v])
      if (sums_[c] == r_) return true;
    return false;
  }

  void Dfs(int i) {
    if (i == n_) {
      Monomial m(n_);
      for (int v = 0; v < n_; ++v) m.Set(v, e_[v]);
      out_.push_back(m);
      return;
    }
    // Variables outside every cover never appear in a minimal generator.
    const int top = containing_[i].empty() ? 0 : r_;
    for (int value = 0; value <= top; ++value) {
      e_[i] = value;
      for (int c : containing_[i]) sums_[c] += value;
      bool ok = true;
      for (int c : ending_at_[i]) {
        if (sums_[c] < r_) {
          ok = false;
          break;
        }
      }
      if (ok) {
        for (int v : settled_at_[i]) {
          if (e_[v] > 0 && !Tight(v)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) Dfs(i + 1);
      for (int c : containing_[i]) sums_[c] -= value;
    }
    e_[i] = 0;
  }

  const int n_;
  const int r_;
  const std::vector<VertexSet>& covers_;
  std::vector<int> e_;
  std::vector<int> sums_;
  std::vector<std::vector<int>> containing_;
  std::vector<std::vector<int>> ending_at_;
  std::vector<std::vector<int>> settled_at_;
  std::vector<Monomial> out_;
};

}  // namespace

std::vector<Monomial> Minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    int da = a.Degree(), db = b.Degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& k : kept) {
      if (k.Divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal MonomialIdeal::Zero(int n) {
  MonomialIdeal ideal;
  ideal.n_ = Monomial(n).n();
  return ideal;
}

MonomialIdeal MonomialIdeal::Unit(int n) {
  MonomialIdeal ideal = Zero(n);
  ideal.gens_.push_back(Monomial(n));
  return ideal;
}

MonomialIdeal MonomialIdeal::FromGenerators(int n, std::vector<Monomial> gens) {
  MonomialIdeal ideal = Zero(n);
  for (const Monomial& g : gens) {
    if (g.n() != n) throw InvalidArgument("generator ring size disagrees with ideal");
  }
  ideal.gens_ = Minimalize(std::move(gens));
  return ideal;
}

bool MonomialIdeal::Contains(const Monomial& m) const {
  CheckRing(*this, m);
  for (const Monomial& g : gens_)
    if (g.Divides(m)) return true;
  return false;
}

bool MonomialIdeal::ContainsIdeal(const MonomialIdeal& other) const {
  CheckSameRing(*this, other);
  for (const Monomial& g : other.gens_)
    if (!Contains(g)) return false;
  return true;
}

Monomial MonomialIdeal::LcmOfGens() const {
  Monomial l(n_);
  for (const Monomial& g : gens_) l = l.Lcm(g);
  return l;
}

std::string MonomialIdeal::ToString() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].ToString();
  }
  return out + ")";
}

MonomialIdeal EdgeIdeal(const Graph& g) {
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges()) {
    gens.push_back(Monomial::Squarefree(g.n(), VertexSet::FromList({u, v})));
  }
  return MonomialIdeal::FromGenerators(g.n(), std::move(gens));
}

MonomialIdeal PrimePower(int n, VertexSet c, int r) {
  if (r < 1) throw InvalidArgument("power exponent must be >= 1");
  std::vector<int> vars = c.ToVector();
  if (vars.empty()) return MonomialIdeal::Zero(n);
  std::vector<Monomial> gens;
  Monomial m(n);
  // All degree-r monomials in the variables of c.
  auto rec = [&](auto&& self, size_t idx, int left) -> void {
    if (idx + 1 == vars.size()) {
      Monomial t = m;
      t.Set(vars[idx], left);
      gens.push_back(t);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      m.Set(vars[idx], k);
      self(self, idx + 1, left - k);
    }
    m.Set(vars[idx], 0);
  };
  rec(rec, 0, r);
  return MonomialIdeal::FromGenerators(n, std::move(gens));
}

MonomialIdeal Power(const MonomialIdeal& ideal, int r) {
  CheckPowerCaps(ideal.n(), r);
  if (r == 1 || ideal.IsZero() || ideal.IsUnit()) return ideal;
  const auto& g = ideal.gens();
  std::unordered_set<Monomial, MonomialHash> products;
  // Multisets of r generators, as non-decreasing index sequences.
  std::vector<Monomial> partial(r + 1, Monomial(ideal.n()));
  auto rec = [&](auto&& self, int depth, int from) -> void {
    if (depth == r) {
      products.insert(partial[r]);
      return;
    }
    for (int k = from; k < static_cast<int>(g.size()); ++k) {
      partial[depth + 1] = partial[depth] * g[k];
      self(self, depth + 1, k);
    }
  };
  rec(rec, 0, 0);
  return MonomialIdeal::FromGenerators(
      ideal.n(), std::vector<Monomial>(products.begin(), products.end()));
}

MonomialIdeal SymbolicPowerEdge(const Graph& g, int r) {
  CheckPowerCaps(g.n(), r);
  if (g.NumEdges() == 0) return MonomialIdeal::Zero(g.n());
  if (r == 1) return EdgeIdeal(g);
  VertexCoverList covers = MinimalVertexCovers(g);
  SymbolicBox box(g.n(), covers.covers, r);
  std::vector<Monomial> gens = box.Run();
  // Every survivor is minimal by the local tightness test; sort only.
  std::sort(gens.begin(), gens.end());
  return MonomialIdeal::FromGenerators(g.n(), std::move(gens));
}

MonomialIdeal SymbolicPowerByIntersection(const Graph& g, int r) {
  CheckPowerCaps(g.n(), r);
  if (g.NumEdges() == 0) return MonomialIdeal::Zero(g.n());
  VertexCoverList covers = MinimalVertexCovers(g);
  MonomialIdeal acc = MonomialIdeal::Unit(g.n());
  for (VertexSet c : covers.covers) acc = Intersect(acc, PrimePower(g.n(), c, r));
  return acc;
}

bool SymbolicMembership(const VertexCoverList& covers, const Monomial& m, int r) {
  for (VertexSet c : covers.covers) {
    int sum = 0;
    for (int v : c) sum += m[v];
    if (sum < r) return false;
  }
  return true;
}

bool SymbolicMembership(const Graph& g, const Monomial& m, int r) {
  if (m.n() != g.n()) throw InvalidArgument("monomial and graph disagree on n");
  if (g.NumEdges() == 0) return false;
  return SymbolicMembership(MinimalVertexCovers(g), m, r);
}

MonomialIdeal Intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  CheckSameRing(a, b);
  if (a.IsZero() || b.IsZero()) return MonomialIdeal::Zero(a.n());
  std::unordered_set<Monomial, MonomialHash> lcms;
  for (const Monomial& x : a.gens())
    for (const Monomial& y : b.gens()) lcms.insert(x.Lcm(y));
  return MonomialIdeal::FromGenerators(a.n(),
                                       std::vector<Monomial>(lcms.begin(), lcms.end()));
}

MonomialIdeal Sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  CheckSameRing(a, b);
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal::FromGenerators(a.n(), std::move(gens));
}

MonomialIdeal Colon(const MonomialIdeal& ideal, const Monomial& f) {
  CheckRing(ideal, f);
  std::vector<Monomial> gens;
  gens.reserve(ideal.gens().size());
  for (const Monomial& g : ideal.gens()) gens.push_back(g.ColonBy(f));
  return MonomialIdeal::FromGenerators(ideal.n(), std::move(gens));
}

MonomialIdeal AddVariableGen(const MonomialIdeal& ideal, int v) {
  if (v < 0 || v >= ideal.n()) throw InvalidArgument("variable index out of range");
  return AddGenerator(ideal, Monomial::Variable(ideal.n(), v));
}

MonomialIdeal AddGenerator(const MonomialIdeal& ideal, const Monomial& f) {
  CheckRing(ideal, f);
  std::vector<Monomial> gens = ideal.gens();
  gens.push_back(f);
  return MonomialIdeal::FromGenerators(ideal.n(), std::move(gens));
}

Json IdealToJson(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const Monomial& g : ideal.gens()) gens.push_back(g.Exponents());
  return Json{{"n", ideal.n()}, {"gens", gens}};
}

MonomialIdeal IdealFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("gens")) {
    throw InvalidArgument("ideal JSON needs \"n\" and \"gens\"");
  }
  const int n = j.at("n").get<int>();
  std::vector<Monomial> gens;
  for (const auto& e : j.at("gens")) {
    std::vector<int> exps = e.get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != n) throw InvalidArgument("generator length != n");
    gens.push_back(Monomial::FromExponents(exps));
  }
  return MonomialIdeal::FromGenerators(n, std::move(gens));
}

}  // namespace eil
