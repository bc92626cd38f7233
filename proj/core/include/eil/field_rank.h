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

#ifndef EIL_FIELD_RANK_H_
#define EIL_FIELD_RANK_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace eil {

inline constexpr int64_t kDefaultPrime = 32003;

// GF(p) for a prime p, or the rationals.
struct Field {
  bool rational = false;
  int64_t p = kDefaultPrime;

  static Field Prime(int64_t p);
  static Field Rational() { return Field{true, 0}; }

  // 0 for the rationals.
  int64_t characteristic() const { return rational ? 0 : p; }
  std::string ToString() const;
  bool operator==(const Field&) const = default;
};

// Row-major integer matrix.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int64_t> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}
  int64_t& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  int64_t at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

// Columns as (row, value) lists with distinct rows.
using SparseColumn = std::vector<std::pair<int, int64_t>>;

int RankModP(DenseMatrix m, int64_t p);
int RankModPSparse(std::vector<SparseColumn> cols, int64_t p);
// Exact rank over Q by fraction-free (Bareiss) elimination.
int RankRational(const DenseMatrix& m);

int Rank(const DenseMatrix& m, const Field& field);

}  // namespace eil

#endif  // EIL_FIELD_RANK_H_
