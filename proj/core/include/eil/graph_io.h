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

#ifndef EIL_GRAPH_IO_H_
#define EIL_GRAPH_IO_H_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "eil/graph.h"

namespace eil {

// Key order in emitted documents is fixed, so output is byte-stable.
using Json = nlohmann::ordered_json;

// Text format: first line `n`, then one `u v` line per edge (0-based).
// Blank lines and lines starting with '#' are ignored.
Graph ParseGraphText(std::string_view text);
std::string FormatGraphText(const Graph& g);

// {"n": int, "edges": [[u,v],...], "names": [...]}; names optional.
Graph GraphFromJson(const Json& j);
Json GraphToJson(const Graph& g);

// Reads either format; JSON is recognized by a leading '{'.
Graph ParseGraph(std::string_view text);
Graph ReadGraphFile(const std::string& path);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace eil

#endif  // EIL_GRAPH_IO_H_
