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

#include "eil/field_rank.h"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <unordered_map>

#include "eil/error.h"

namespace eil {
namespace {

int64_t Mod(int64_t a, int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

int64_t PowMod(int64_t b, int64_t e, int64_t p) {
  int64_t r = 1;
  b = Mod(b, p);
  while (e) {
    if (e & 1) r = static_cast<int64_t>((__int128)r * b % p);
    b = static_cast<int64_t>((__int128)b * b % p);
    e >>= 1;
  }
  return r;
}

int64_t Inverse(int64_t a, int64_t p) { return PowMod(a, p - 2, p); }

bool IsPrime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::Prime(int64_t p) {
  if (!IsPrime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (p > (int64_t{1} << 31)) throw InvalidArgument("characteristic above 2^31");
  return Field{false, p};
}

std::string Field::ToString() const {
  return rational ? "QQ" : "GF(" + std::to_string(p) + ")";
}

int RankModP(DenseMatrix m, int64_t p) {
  for (auto& v : m.data) v = Mod(v, p);
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (m.at(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int k = c; k < m.cols; ++k) std::swap(m.at(pivot, k), m.at(rank, k));
    }
    const int64_t inv = Inverse(m.at(rank, c), p);
    for (int k = c; k < m.cols; ++k) m.at(rank, k) = m.at(rank, k) * inv % p;
    for (int r = rank + 1; r < m.rows; ++r) {
      const int64_t f = m.at(r, c);
      if (!f) continue;
      for (int k = c; k < m.cols; ++k) m.at(r, k) = Mod(m.at(r, k) - f * m.at(rank, k), p);
    }
    ++rank;
  }
  return rank;
}

int RankModPSparse(std::vector<SparseColumn> cols, int64_t p) {
  // Column reduction keyed by the lowest nonzero row.
  std::unordered_map<int, SparseColumn> by_low;
  int rank = 0;
  for (SparseColumn& col : cols) {
    std::sort(col.begin(), col.end());
    for (auto& [r, v] : col) v = Mod(v, p);
    col.erase(std::remove_if(col.begin(), col.end(), [](auto& e) { return e.second == 0; }),
              col.end());
    while (!col.empty()) {
      const int low = col.back().first;
      auto it = by_low.find(low);
      if (it == by_low.end()) break;
      const SparseColumn& piv = it->second;
      const int64_t f = col.back().second * Inverse(piv.back().second, p) % p;
      SparseColumn merged;
      merged.reserve(col.size() + piv.size());
      size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
          merged.push_back(col[i++]);
        } else if (i == col.size() || piv[j].first < col[i].first) {
          merged.emplace_back(piv[j].first, Mod(-f * piv[j].second, p));
          ++j;
        } else {
          int64_t v = Mod(col[i].second - f * piv[j].second, p);
          if (v) merged.emplace_back(col[i].first, v);
          ++i;
          ++j;
        }
      }
      col = std::move(merged);
    }
    if (!col.empty()) {
      by_low.emplace(col.back().first, std::move(col));
      ++rank;
    }
  }
  return rank;
}

int RankRational(const DenseMatrix& m) {
  using boost::multiprecision::cpp_int;
  std::vector<std::vector<cpp_int>> a(m.rows, std::vector<cpp_int>(m.cols));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) a[r][c] = m.at(r, c);
  cpp_int prev = 1;
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = rank + 1; r < m.rows; ++r) {
      for (int k = c + 1; k < m.cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

int Rank(const DenseMatrix& m, const Field& field) {
  return field.rational ? RankRational(m) : RankModP(m, field.p);
}

}  // namespace eil
