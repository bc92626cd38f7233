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

#ifndef EIL_VERTEX_SET_H_
#define EIL_VERTEX_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace eil {

// Hard ceiling on graph order. Every downstream algorithm is exponential.
inline constexpr int kMaxVertices = 24;

// A subset of {0, ..., kMaxVertices - 1} stored as a bitmask.
class VertexSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    Iterator() = default;
    explicit Iterator(uint32_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const Iterator& other) const = default;

   private:
    uint32_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(uint32_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members) {
    for (int v : members) Insert(v);
  }

  static VertexSet FromList(const std::vector<int>& members) {
    VertexSet s;
    for (int v : members) s.Insert(v);
    return s;
  }
  // {0, ..., n - 1}.
  static constexpr VertexSet Range(int n) {
    return VertexSet(n >= 32 ? ~uint32_t{0} : ((uint32_t{1} << n) - 1));
  }
  static constexpr VertexSet Singleton(int v) { return VertexSet(uint32_t{1} << v); }

  constexpr uint32_t bits() const { return bits_; }
  constexpr bool Contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool Empty() const { return bits_ == 0; }
  constexpr int Size() const { return std::popcount(bits_); }
  // Least member; undefined on the empty set.
  constexpr int Min() const { return std::countr_zero(bits_); }

  void Insert(int v) { bits_ |= uint32_t{1} << v; }
  void Erase(int v) { bits_ &= ~(uint32_t{1} << v); }

  constexpr bool IsSubsetOf(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const VertexSet&) const = default;
  // Canonical order: by bitmask value.
  constexpr bool operator<(const VertexSet& o) const { return bits_ < o.bits_; }

  Iterator begin() const { return Iterator(bits_); }
  Iterator end() const { return Iterator(0); }

  std::vector<int> ToVector() const { return std::vector<int>(begin(), end()); }
  // "{0,2,5}".
  std::string ToString() const;

 private:
  uint32_t bits_ = 0;
};

}  // namespace eil

#endif  // EIL_VERTEX_SET_H_
