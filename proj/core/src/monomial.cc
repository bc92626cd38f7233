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

#include "eil/monomial.h"

#include <algorithm>
#include <cctype>
#include <string>

#include "eil/error.h"

namespace eil {

Monomial::Monomial(int n) {
  if (n < 0 || n > kMaxVariables) {
    throw InvalidArgument("ambient variable count " + std::to_string(n) +
                          " outside 0.." + std::to_string(kMaxVariables));
  }
  n_ = static_cast<uint8_t>(n);
}

Monomial Monomial::FromExponents(const std::vector<int>& exponents) {
  Monomial m(static_cast<int>(exponents.size()));
  for (int i = 0; i < m.n(); ++i) m.Set(i, exponents[i]);
  return m;
}

Monomial Monomial::Variable(int n, int i) {
  Monomial m(n);
  m.Set(i, 1);
  return m;
}

Monomial Monomial::Squarefree(int n, VertexSet support) {
  Monomial m(n);
  for (int i : support) m.Set(i, 1);
  return m;
}

void Monomial::Set(int i, int value) {
  if (i < 0 || i >= n_) {
    throw InvalidArgument("variable index " + std::to_string(i) + " out of range");
  }
  if (value < 0 || value > kMaxExponent) {
    throw InvalidArgument("exponent " + std::to_string(value) + " outside 0.." +
                          std::to_string(kMaxExponent));
  }
  e_[i] = static_cast<uint8_t>(value);
}

int Monomial::Degree() const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d += e_[i];
  return d;
}

VertexSet Monomial::Support() const {
  VertexSet s;
  for (int i = 0; i < n_; ++i)
    if (e_[i]) s.Insert(i);
  return s;
}

std::vector<int> Monomial::Exponents() const {
  return std::vector<int>(e_.begin(), e_.begin() + n_);
}

Monomial Monomial::Lcm(const Monomial& other) const {
  Monomial r = *this;
  for (int i = 0; i < n_; ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
  return r;
}

Monomial Monomial::Gcd(const Monomial& other) const {
  Monomial r = *this;
  for (int i = 0; i < n_; ++i) r.e_[i] = std::min(e_[i], other.e_[i]);
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (int i = 0; i < n_; ++i) {
    int v = e_[i] + other.e_[i];
    if (v > kMaxExponent) throw CapExceeded("monomial exponent overflow");
    r.e_[i] = static_cast<uint8_t>(v);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (int i = 0; i < n_; ++i) {
    if (other.e_[i] > e_[i]) throw InvalidArgument("monomial quotient is not exact");
    r.e_[i] = static_cast<uint8_t>(e_[i] - other.e_[i]);
  }
  return r;
}

Monomial Monomial::ColonBy(const Monomial& f) const {
  Monomial r = *this;
  for (int i = 0; i < n_; ++i)
    r.e_[i] = static_cast<uint8_t>(e_[i] > f.e_[i] ? e_[i] - f.e_[i] : 0);
  return r;
}

std::string Monomial::ToString() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (!e_[i]) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (e_[i] > 1) out += '^' + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

size_t Monomial::Hash() const {
  // FNV-1a over the used prefix.
  uint64_t h = 1469598103934665603ull ^ n_;
  for (int i = 0; i < n_; ++i) {
    h ^= e_[i];
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

Monomial ParseMonomial(std::string_view text, int n) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InvalidArgument("empty monomial");
  if (s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  Monomial m(n);
  if (s == "1") return m;
  if (std::isdigit(static_cast<unsigned char>(s.front()))) {
    std::vector<int> exps;
    size_t pos = 0;
    while (pos <= s.size()) {
      size_t comma = s.find(',', pos);
      std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty()) throw InvalidArgument("malformed exponent list");
      exps.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (static_cast<int>(exps.size()) != n) {
      throw InvalidArgument("exponent list has " + std::to_string(exps.size()) +
                            " entries, ring has " + std::to_string(n));
    }
    return Monomial::FromExponents(exps);
  }
  size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == '*') {
      ++pos;
      continue;
    }
    if (s[pos] != 'x') throw InvalidArgument("malformed monomial \"" + std::string(text) + "\"");
    ++pos;
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw InvalidArgument("variable index missing");
    int var = std::stoi(s.substr(start, pos - start));
    int exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw InvalidArgument("exponent missing");
      exp = std::stoi(s.substr(start, pos - start));
    }
    if (var >= n) throw InvalidArgument("variable x" + std::to_string(var) + " outside ring");
    m.Set(var, m[var] + exp);
  }
  return m;
}

}  // namespace eil
