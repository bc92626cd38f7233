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

#ifndef EIL_ERROR_H_
#define EIL_ERROR_H_

#include <chrono>
#include <stdexcept>
#include <string>

namespace eil {

// Malformed input: out-of-range vertex, loop edge, mismatched ambient ring.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed one of the configured size ceilings. Callers in
// the harness turn this into a "skipped" verdict.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wall-clock budget ran out inside a cooperative loop.
class DeadlineExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal self-check failed. Always a bug, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Cooperative deadline. A default-constructed deadline never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(std::chrono::milliseconds budget)
      : has_limit_(true), expires_(Clock::now() + budget) {}

  static Deadline Never() { return Deadline(); }

  bool Expired() const { return has_limit_ && Clock::now() >= expires_; }

  void Check(const char* where) const {
    if (Expired()) throw DeadlineExceeded(std::string("deadline exceeded in ") + where);
  }

 private:
  bool has_limit_ = false;
  Clock::time_point expires_{};
};

}  // namespace eil

#endif  // EIL_ERROR_H_
