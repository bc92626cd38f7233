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

#ifndef EIL_MONOMIAL_H_
#define EIL_MONOMIAL_H_

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>
#include <vector>

#include "eil/vertex_set.h"

namespace eil {

inline constexpr int kMaxVariables = kMaxVertices;
inline constexpr int kMaxExponent = 255;

// x_0^{e_0} ... x_{n-1}^{e_{n-1}} in an ambient ring with n variables.
// Exponents are stored inline, so copies are cheap and allocation free.
class Monomial {
 public:
  // The monomial 1 in zero variables.
  Monomial() = default;
  // The monomial 1 in n variables.
  explicit Monomial(int n);

  static Monomial FromExponents(const std::vector<int>& exponents);
  static Monomial Variable(int n, int i);
  // x_U.
  static Monomial Squarefree(int n, VertexSet support);

  int n() const { return n_; }
  int operator[](int i) const { return e_[i]; }
  int Degree() const;
  VertexSet Support() const;
  std::vector<int> Exponents() const;
  bool IsOne() const { return Degree() == 0; }

  void Set(int i, int value);

  bool Divides(const Monomial& other) const {
    for (int i = 0; i < n_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  Monomial Lcm(const Monomial& other) const;
  Monomial Gcd(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // this / other; requires other | this.
  Monomial operator/(const Monomial& other) const;
  // this / gcd(this, f): the generator of (this : f).
  Monomial ColonBy(const Monomial& f) const;

  // Lexicographic on exponent vectors (x_0 most significant).
  std::strong_ordering operator<=>(const Monomial& other) const {
    int c = std::memcmp(e_.data(), other.e_.data(), kMaxVariables);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return n_ <=> other.n_;
  }
  bool operator==(const Monomial& other) const {
    return n_ == other.n_ && e_ == other.e_;
  }

  // "x0^2*x1", or "1".
  std::string ToString() const;
  size_t Hash() const;

 private:
  uint8_t n_ = 0;
  std::array<uint8_t, kMaxVariables> e_{};
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.Hash(); }
};

// Accepts "1", "x0^2*x1*x3", "x0^2x1", or an exponent list "2,1,0,1".
Monomial ParseMonomial(std::string_view text, int n);

}  // namespace eil

#endif  // EIL_MONOMIAL_H_
