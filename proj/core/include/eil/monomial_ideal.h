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

#ifndef EIL_MONOMIAL_IDEAL_H_
#define EIL_MONOMIAL_IDEAL_H_

#include <string>
#include <vector>

#include "eil/graph.h"
#include "eil/graph_io.h"
#include "eil/invariants.h"
#include "eil/monomial.h"

namespace eil {

// Ceilings for ordinary and symbolic powers.
inline constexpr int kMaxPowerExponent = 6;
inline constexpr int kMaxPowerVariables = 14;

// A monomial ideal held by its minimal generators, sorted ascending.
// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  static MonomialIdeal Zero(int n);
  static MonomialIdeal Unit(int n);
  // Minimalizes; every generator must live in n variables.
  static MonomialIdeal FromGenerators(int n, std::vector<Monomial> gens);

  int n() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int NumGens() const { return static_cast<int>(gens_.size()); }
  bool IsZero() const { return gens_.empty(); }
  bool IsUnit() const { return gens_.size() == 1 && gens_[0].IsOne(); }

  bool Contains(const Monomial& m) const;
  // Every generator of `other` lies in this ideal.
  bool ContainsIdeal(const MonomialIdeal& other) const;
  // lcm of all generators; 1 for the zero ideal.
  Monomial LcmOfGens() const;

  bool operator==(const MonomialIdeal& other) const {
    return n_ == other.n_ && gens_ == other.gens_;
  }

  std::string ToString() const;

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
};

// Divisibility-minimal, sorted, duplicate-free subset of `gens`.
std::vector<Monomial> Minimalize(std::vector<Monomial> gens);

MonomialIdeal EdgeIdeal(const Graph& g);
// P_C = (x_i : i in C), raised to r.
MonomialIdeal PrimePower(int n, VertexSet c, int r);

// I^r for r >= 1.
MonomialIdeal Power(const MonomialIdeal& ideal, int r);

// I(G)^(r) by enumerating the box [0, r]^n against the minimal vertex covers.
MonomialIdeal SymbolicPowerEdge(const Graph& g, int r);
// Same ideal, as the iterated intersection of P_C^r.
MonomialIdeal SymbolicPowerByIntersection(const Graph& g, int r);
// Cover-degree criterion: sum over C of m_i >= r for every minimal cover C.
bool SymbolicMembership(const Graph& g, const Monomial& m, int r);
bool SymbolicMembership(const VertexCoverList& covers, const Monomial& m, int r);

MonomialIdeal Intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal Sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal Colon(const MonomialIdeal& ideal, const Monomial& f);
// (I, x_v).
MonomialIdeal AddVariableGen(const MonomialIdeal& ideal, int v);
// (I, f).
MonomialIdeal AddGenerator(const MonomialIdeal& ideal, const Monomial& f);

// {"n": n, "gens": [[e_0, ...], ...]}.
Json IdealToJson(const MonomialIdeal& ideal);
MonomialIdeal IdealFromJson(const Json& j);

}  // namespace eil

#endif  // EIL_MONOMIAL_IDEAL_H_
