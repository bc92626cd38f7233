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

#ifndef EIL_REGULARITY_H_
#define EIL_REGULARITY_H_

#include <compare>
#include <string>
#include <vector>

#include "eil/graph.h"
#include "eil/graph_io.h"
#include "eil/monomial_ideal.h"
#include "eil/resolution.h"

namespace eil {

// An integer or -infinity; -infinity sorts below every integer and absorbs
// addition.
class Regularity {
 public:
  constexpr Regularity() = default;
  constexpr Regularity(int value) : finite_(true), value_(value) {}  // NOLINT

  static constexpr Regularity MinusInfinity() { return Regularity(); }

  constexpr bool IsMinusInfinity() const { return !finite_; }
  // Throws InvalidArgument on -infinity.
  int value() const;

  constexpr std::strong_ordering operator<=>(const Regularity& o) const {
    if (!finite_ || !o.finite_) return finite_ <=> o.finite_;
    return value_ <=> o.value_;
  }
  constexpr bool operator==(const Regularity& o) const {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }
  constexpr Regularity operator+(const Regularity& o) const {
    if (!finite_ || !o.finite_) return MinusInfinity();
    return Regularity(value_ + o.value_);
  }
  constexpr Regularity operator-(int d) const {
    return finite_ ? Regularity(value_ - d) : MinusInfinity();
  }

  std::string ToString() const;
  // An integer, or the string "-inf".
  Json ToJson() const;

 private:
  bool finite_ = false;
  int value_ = 0;
};

struct RegularityOptions {
  Field field;
  int64_t frame_cap = kDefaultFrameCap;
  Deadline deadline;
};

// reg(S/I): 0 for the zero ideal, -infinity for the unit ideal.
// Candidates come from the Schreyer frame, visited by decreasing |m| - i;
// the first degree with nonzero homology settles the answer.
Regularity RegularityQuotient(const MonomialIdeal& ideal, const RegularityOptions& options = {});
// Same value from a full lcm-lattice Betti table.
Regularity RegularityQuotientFromLattice(const MonomialIdeal& ideal,
                                         const BettiOptions& options = {});

enum class PowerKind { kPlain, kOrdinary, kSymbolic };

struct PowerSpec {
  PowerKind kind = PowerKind::kPlain;
  int r = 1;

  static PowerSpec Plain() { return {PowerKind::kPlain, 1}; }
  static PowerSpec Ordinary(int r) { return {PowerKind::kOrdinary, r}; }
  static PowerSpec Symbolic(int r) { return {PowerKind::kSymbolic, r}; }
  std::string ToString() const;
};

// I(G), I(G)^r or I(G)^(r).
MonomialIdeal GraphIdeal(const Graph& g, const PowerSpec& spec);

// reg(S/I(G)^*), computed on the whole graph.
Regularity RegularityDirect(const Graph& g, const PowerSpec& spec,
                            const RegularityOptions& options = {});

// Plain: sum over connected components. Symbolic: per-component values
// folded with the disjoint-union formula. Ordinary: computed directly.
// Isolated vertices are dropped throughout.
Regularity RegularityAdditive(const Graph& g, const PowerSpec& spec,
                              const RegularityOptions& options = {});

// a[s], b[s] = reg of the s-th symbolic power of two ideals in disjoint
// variables, s = 1..r (index 0 unused). Returns the same for their sum:
//   max over n in [1, s-1], m in [1, s] of
//     a[s-n] + b[n] + 1  and  a[s-m+1] + b[m].
std::vector<Regularity> FoldSymbolic(const std::vector<Regularity>& a,
                                     const std::vector<Regularity>& b);

}  // namespace eil

#endif  // EIL_REGULARITY_H_
