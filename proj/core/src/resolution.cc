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

#include "eil/resolution.h"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "parallel.h"

namespace eil {
namespace {

void CheckProper(const MonomialIdeal& ideal) {
  if (ideal.IsZero()) throw InvalidArgument("zero ideal has no Betti table");
  if (ideal.IsUnit()) throw InvalidArgument("unit ideal has no Betti table");
}

// Recursive frame: generator u at position k of the (lex-descending) list
// contributes a summand at the current level and a child frame one level up,
// resolving the ideal of (g_j : u) for j < k shifted by u.
class FrameBuilder {
 public:
  FrameBuilder(int64_t cap, const Deadline& deadline) : cap_(cap), deadline_(deadline) {}

  void Run(const std::vector<Monomial>& gens, const Monomial& shift, int level) {
    std::vector<Monomial> colons;
    for (size_t k = 0; k < gens.size(); ++k) {
      const Monomial& u = gens[k];
      const Monomial m = shift * u;
      Record(m, level);
      if (k == 0) continue;
      colons.clear();
      for (size_t j = 0; j < k; ++j) colons.push_back(gens[j].ColonBy(u));
      std::vector<Monomial> child = Minimalize(colons);
      std::reverse(child.begin(), child.end());
      Run(child, m, level + 1);
    }
  }

  Frame Finish() {
    Frame f;
    f.summands = summands_;
    f.shape = std::move(shape_);
    f.degrees.reserve(masks_.size());
    for (auto& [m, mask] : masks_) f.degrees.push_back({m, mask});
    std::sort(f.degrees.begin(), f.degrees.end(),
              [](const FrameDegree& a, const FrameDegree& b) { return a.m < b.m; });
    return f;
  }

 private:
  void Record(const Monomial& m, int level) {
    if (++summands_ > cap_) {
      throw CapExceeded("resolution frame exceeds " + std::to_string(cap_) + " summands");
    }
    if ((summands_ & 0xFFF) == 0) deadline_.Check("resolution frame");
    masks_[m] |= uint32_t{1} << level;
    ++shape_[{level, m.Degree()}];
  }

  const int64_t cap_;
  const Deadline& deadline_;
  int64_t summands_ = 0;
  std::unordered_map<Monomial, uint32_t, MonomialHash> masks_;
  std::map<std::pair<int, int>, int64_t> shape_;
};

}  // namespace

std::vector<Monomial> LcmLattice(const MonomialIdeal& ideal, int64_t cap,
                                 const Deadline& deadline) {
  CheckProper(ideal);
  const auto& gens = ideal.gens();
  std::unordered_set<Monomial, MonomialHash> seen(gens.begin(), gens.end());
  std::vector<Monomial> work(gens.begin(), gens.end());
  if (static_cast<int64_t>(seen.size()) > cap) throw CapExceeded("lcm lattice cap exceeded");
  // lcm of a subset is reached by adding one generator at a time.
  for (size_t w = 0; w < work.size(); ++w) {
    if ((w & 0x3FF) == 0) deadline.Check("lcm lattice");
    const Monomial x = work[w];
    for (const Monomial& g : gens) {
      Monomial z = x.Lcm(g);
      if (seen.insert(z).second) {
        if (static_cast<int64_t>(seen.size()) > cap) {
          throw CapExceeded("lcm lattice exceeds " + std::to_string(cap) + " elements");
        }
        work.push_back(z);
      }
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

SimplicialComplex UpperKoszul(const MonomialIdeal& ideal, const Monomial& m) {
  const VertexSet support = m.Support();
  std::vector<VertexSet> facets;
  for (const Monomial& g : ideal.gens()) {
    if (!g.Divides(m)) continue;
    // tau may use i only where g_i < m_i.
    VertexSet free;
    for (int i : support)
      if (g[i] < m[i]) free.Insert(i);
    facets.push_back(free);
  }
  if (facets.empty()) throw InvalidArgument(m.ToString() + " is not in the ideal");
  return SimplicialComplex::FromFacets(support, std::move(facets));
}

Frame SchreyerFrame(const MonomialIdeal& ideal, int64_t cap, const Deadline& deadline) {
  CheckProper(ideal);
  std::vector<Monomial> gens = ideal.gens();
  std::reverse(gens.begin(), gens.end());
  FrameBuilder builder(cap, deadline);
  builder.Run(gens, Monomial(ideal.n()), 0);
  return builder.Finish();
}

int BettiTable::IdealRegularity() const {
  if (coarse.empty()) throw InvalidArgument("empty Betti table");
  int reg = INT32_MIN;
  for (const auto& [key, beta] : coarse) reg = std::max(reg, key.second - key.first);
  return reg;
}

Json BettiTable::ToJson() const {
  Json fine_json = Json::array();
  for (const auto& [key, beta] : fine) {
    fine_json.push_back(Json::array({key.first, key.second.Exponents(), beta}));
  }
  Json coarse_json = Json::array();
  for (const auto& [key, beta] : coarse) {
    coarse_json.push_back(Json::array({key.first, key.second, beta}));
  }
  return Json{{"char", field.characteristic()}, {"fine", fine_json}, {"coarse", coarse_json}};
}

BettiTable ComputeBettiTable(const MonomialIdeal& ideal, const BettiOptions& options) {
  CheckProper(ideal);
  std::vector<Monomial> candidates;
  if (options.source == CandidateSource::kLcmLattice) {
    candidates = LcmLattice(ideal, options.lattice_cap, options.deadline);
  } else {
    for (const FrameDegree& d : SchreyerFrame(ideal, options.frame_cap, options.deadline).degrees)
      candidates.push_back(d.m);
  }
  std::vector<std::vector<int64_t>> homology(candidates.size());
  internal::ParallelFor(candidates.size(), options.threads, [&](size_t k) {
    if ((k & 0xFF) == 0) options.deadline.Check("Betti table");
    homology[k] = ReducedHomology(UpperKoszul(ideal, candidates[k]), options.field);
  });
  BettiTable table;
  table.field = options.field;
  for (size_t k = 0; k < candidates.size(); ++k) {
    for (size_t s = 0; s < homology[k].size(); ++s) {
      const int64_t beta = homology[k][s];
      if (beta == 0) continue;
      // dims[s] is H~_{s-1}, which is beta_{s, m}.
      const int i = static_cast<int>(s);
      table.fine[{i, candidates[k]}] = beta;
      table.coarse[{i, candidates[k].Degree()}] += beta;
    }
  }
  if (!GeneratorBettiConsistent(table, ideal)) {
    throw InternalError("beta_0 disagrees with the minimal generators of " + ideal.ToString());
  }
  return table;
}

bool GeneratorBettiConsistent(const BettiTable& table, const MonomialIdeal& ideal) {
  std::unordered_set<Monomial, MonomialHash> gens(ideal.gens().begin(), ideal.gens().end());
  size_t seen = 0;
  for (const auto& [key, beta] : table.fine) {
    if (key.first != 0) continue;
    if (beta != 1 || !gens.count(key.second)) return false;
    ++seen;
  }
  return seen == gens.size();
}

}  // namespace eil
