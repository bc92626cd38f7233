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

// Multigraded Betti numbers of monomial ideals.
//
// beta_{i,m}(I) = dim H~_{i-1}(K^m(I)), where the upper Koszul complex K^m(I)
// holds the squarefree tau <= supp(m) with m / x^tau in I. Nonzero values
// only occur at lcms of generator subsets (the lcm lattice) and, more
// sharply, at multidegrees of any free resolution. The Schreyer frame below
// is such a resolution and is far smaller than the lattice for powers.

#ifndef EIL_RESOLUTION_H_
#define EIL_RESOLUTION_H_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "eil/error.h"
#include "eil/field_rank.h"
#include "eil/graph_io.h"
#include "eil/monomial_ideal.h"
#include "eil/simplicial_complex.h"

namespace eil {

inline constexpr int64_t kDefaultLatticeCap = 200'000;
inline constexpr int64_t kDefaultFrameCap = 50'000'000;

// Join closure of the minimal generators under lcm, ascending.
// Throws CapExceeded past `cap` elements.
std::vector<Monomial> LcmLattice(const MonomialIdeal& ideal, int64_t cap = kDefaultLatticeCap,
                                 const Deadline& deadline = {});

// Throws InvalidArgument when m is not in the ideal.
SimplicialComplex UpperKoszul(const MonomialIdeal& ideal, const Monomial& m);

// Multidegrees of a Schreyer-type free resolution of I, deduplicated.
// index_mask bit i is set when the frame has a summand at (i, m).
struct FrameDegree {
  Monomial m;
  uint32_t index_mask = 0;
};

struct Frame {
  std::vector<FrameDegree> degrees;  // ascending by m
  int64_t summands = 0;              // total rank, with multiplicity
  // Total rank per (homological index, total degree).
  std::map<std::pair<int, int>, int64_t> shape;
};

Frame SchreyerFrame(const MonomialIdeal& ideal, int64_t cap = kDefaultFrameCap,
                    const Deadline& deadline = {});

enum class CandidateSource { kLcmLattice, kSchreyerFrame };

struct BettiOptions {
  Field field;
  CandidateSource source = CandidateSource::kLcmLattice;
  int64_t lattice_cap = kDefaultLatticeCap;
  int64_t frame_cap = kDefaultFrameCap;
  Deadline deadline;
  int threads = 1;
};

struct BettiTable {
  Field field;
  // Nonzero entries only.
  std::map<std::pair<int, Monomial>, int64_t> fine;
  std::map<std::pair<int, int>, int64_t> coarse;

  // max(j - i) over nonzero entries: reg(I). Throws on an empty table.
  int IdealRegularity() const;
  // {"char": p, "fine": [[i, [e...], beta], ...], "coarse": [[i, j, beta], ...]}.
  Json ToJson() const;
};

// Throws InvalidArgument on the zero or unit ideal.
BettiTable ComputeBettiTable(const MonomialIdeal& ideal, const BettiOptions& options = {});

// beta_0 is 1 exactly at the minimal generators and 0 elsewhere.
bool GeneratorBettiConsistent(const BettiTable& table, const MonomialIdeal& ideal);

}  // namespace eil

#endif  // EIL_RESOLUTION_H_
