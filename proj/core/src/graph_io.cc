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

#include "eil/graph_io.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "eil/error.h"

namespace eil {

Graph ParseGraphText(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 0) {
        throw InvalidArgument("line " + std::to_string(line_no) +
                              ": expected vertex count");
      }
    } else {
      int u, v;
      if (!(fields >> u >> v)) {
        throw InvalidArgument("line " + std::to_string(line_no) +
                              ": expected an edge `u v`");
      }
      edges.emplace_back(u, v);
    }
    std::string rest;
    if (fields >> rest) {
      throw InvalidArgument("line " + std::to_string(line_no) + ": trailing tokens");
    }
  }
  if (n < 0) throw InvalidArgument("empty graph file");
  return Graph::Build(n, edges);
}

std::string FormatGraphText(const Graph& g) {
  std::string out = std::to_string(g.n()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Graph GraphFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw InvalidArgument("graph JSON needs \"n\" and \"edges\"");
  }
  try {
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw InvalidArgument("each edge must be a pair [u, v]");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return Graph::Build(n, edges, std::move(names));
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed graph JSON: ") + ex.what());
  }
}

Json GraphToJson(const Graph& g) {
  Json j;
  j["n"] = g.n();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  if (!g.names().empty()) j["names"] = g.names();
  return j;
}

Graph ParseGraph(std::string_view text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
      throw InvalidArgument(std::string("invalid JSON: ") + ex.what());
    }
    return GraphFromJson(j);
  }
  return ParseGraphText(text);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

Graph ReadGraphFile(const std::string& path) { return ParseGraph(ReadFile(path)); }

}  // namespace eil
