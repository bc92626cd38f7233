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

// Suites: a fixed list of checks applied to one or more corpora, with a
// JSON report and an exit code.

#ifndef EIL_REPORT_H_
#define EIL_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include "eil/checks.h"
#include "eil/corpus.h"

namespace eil {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSkips = 3;

struct SuiteOptions {
  CheckOptions checks;
  // Replaces the suite's default corpora.
  std::optional<CorpusSpec> corpus;
  std::optional<int> r_max;
  // Replaces the seed of every random default corpus.
  std::optional<uint64_t> seed;
  int threads = 1;
  bool timing = true;
};

struct SuiteReport {
  std::string suite;
  std::vector<CorpusSpec> corpora;
  int r_max = 0;
  std::vector<TheoremCheck> checks;
  double seconds = 0;

  int Count(Verdict v) const;
  bool AnyCapHit() const;
  // kExitFail on any failure, else kExitSkips when a cap or timeout was hit
  // (kExitPass with skips_ok), else kExitPass. Precondition skips are ignored.
  int ExitCode(bool skips_ok = false) const;
  Json ToJson(bool with_timing = true) const;
};

std::vector<std::string> SuiteNames();
// One line per suite.
std::string SuiteDescriptions();

// Throws InvalidArgument on an unknown suite.
SuiteReport RunSuite(const std::string& suite, const SuiteOptions& options);

// EIL_THREADS when set and positive, else the hardware concurrency.
int ThreadsFromEnvironment();

}  // namespace eil

#endif  // EIL_REPORT_H_
