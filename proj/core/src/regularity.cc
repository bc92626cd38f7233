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

#include "eil/regularity.h"

#include <algorithm>
#include <bit>
#include <climits>

namespace eil {

int Regularity::value() const {
  if (!finite_) throw InvalidArgument("regularity is -infinity");
  return value_;
}

std::string Regularity::ToString() const {
  return finite_ ? std::to_string(value_) : "-inf";
}

Json Regularity::ToJson() const {
  return finite_ ? Json(value_) : Json("-inf");
}

std::string PowerSpec::ToString() const {
  switch (kind) {
    case PowerKind::kPlain:
      return "plain";
    case PowerKind::kOrdinary:
      return "ordinary " + std::to_string(r);
    case PowerKind::kSymbolic:
      return "symbolic " + std::to_string(r);
  }
  return "?";
}

Regularity RegularityQuotient(const MonomialIdeal& ideal, const RegularityOptions& options) {
  if (ideal.IsZero()) return 0;
  if (ideal.IsUnit()) return Regularity::MinusInfinity();
  const Frame frame = SchreyerFrame(ideal, options.frame_cap, options.deadline);
  const auto& degrees = frame.degrees;
  auto bound = [&](const FrameDegree& d) {
    return d.m.Degree() - std::countr_zero(d.index_mask);
  };
  std::vector<size_t> order(degrees.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return bound(degrees[a]) > bound(degrees[b]);
  });
  int best = INT_MIN;
  size_t visited = 0;
  for (size_t k : order) {
    const FrameDegree& d = degrees[k];
    if (bound(d) <= best) break;
    if ((++visited & 0xFF) == 0) options.deadline.Check("regularity");
    const std::vector<int64_t> dims =
        ReducedHomology(UpperKoszul(ideal, d.m), options.field);
    for (size_t s = 0; s < dims.size(); ++s) {
      if (dims[s] == 0) continue;
      const int i = static_cast<int>(s);
      if (!((d.index_mask >> i) & 1u)) {
        throw InternalError("nonzero Betti number at (" + std::to_string(i) + ", " +
                            d.m.ToString() + ") outside the resolution frame");
      }
      best = std::max(best, d.m.Degree() - i);
    }
  }
  if (best == INT_MIN) throw InternalError("no nonzero Betti number found");
  return best - 1;
}

Regularity RegularityQuotientFromLattice(const MonomialIdeal& ideal,
                                         const BettiOptions& options) {
  if (ideal.IsZero()) return 0;
  if (ideal.IsUnit()) return Regularity::MinusInfinity();
  return ComputeBettiTable(ideal, options).IdealRegularity() - 1;
}

MonomialIdeal GraphIdeal(const Graph& g, const PowerSpec& spec) {
  switch (spec.kind) {
    case PowerKind::kPlain:
      return EdgeIdeal(g);
    case PowerKind::kOrdinary:
      return Power(EdgeIdeal(g), spec.r);
    case PowerKind::kSymbolic:
      return SymbolicPowerEdge(g, spec.r);
  }
  throw InvalidArgument("unknown power kind");
}

Regularity RegularityDirect(const Graph& g, const PowerSpec& spec,
                            const RegularityOptions& options) {
  return RegularityQuotient(GraphIdeal(g, spec), options);
}

std::vector<Regularity> FoldSymbolic(const std::vector<Regularity>& a,
                                     const std::vector<Regularity>& b) {
  if (a.size() != b.size() || a.size() < 2) throw InvalidArgument("fold needs r >= 1 values");
  const int r = static_cast<int>(a.size()) - 1;
  std::vector<Regularity> out(r + 1);
  for (int s = 1; s <= r; ++s) {
    Regularity best = Regularity::MinusInfinity();
    for (int n = 1; n <= s - 1; ++n) best = std::max(best, a[s - n] + b[n] + 1);
    for (int m = 1; m <= s; ++m) best = std::max(best, a[s - m + 1] + b[m]);
    out[s] = best;
  }
  return out;
}

Regularity RegularityAdditive(const Graph& g, const PowerSpec& spec,
                              const RegularityOptions& options) {
  if (spec.kind == PowerKind::kOrdinary) return RegularityDirect(g, spec, options);
  std::vector<Graph> parts;
  for (VertexSet comp : ConnectedComponents(g)) {
    if (comp.Size() < 2) continue;
    parts.push_back(Induced(g, comp).graph);
  }
  if (parts.empty()) return 0;
  if (spec.kind == PowerKind::kPlain) {
    Regularity total = 0;
    for (const Graph& p : parts) total = total + RegularityDirect(p, spec, options);
    return total;
  }
  std::vector<Regularity> acc;
  for (const Graph& p : parts) {
    std::vector<Regularity> values(spec.r + 1);
    for (int s = 1; s <= spec.r; ++s) values[s] = RegularityDirect(p, PowerSpec::Symbolic(s), options);
    acc = acc.empty() ? values : FoldSymbolic(acc, values);
  }
  return acc[spec.r];
}

}  // namespace eil
