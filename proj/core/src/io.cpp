// Copyright 2026 The subdiff Authors
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

#include "subdiff/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "subdiff/error.hpp"

namespace subdiff {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& source, int line,
                       const std::string& msg) {
  throw InputError(source + ":" + std::to_string(line) + ": " + msg);
}

int IntField(const json& obj, const char* key, const std::string& source,
             int line) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    Fail(source, line, std::string("missing integer field \"") + key + "\"");
  }
  return obj[key].get<int>();
}

// Strict edge list: pairs of integers, no repeats in either orientation.
std::vector<Edge> EdgesField(const json& obj, const std::string& source,
                             int line) {
  if (!obj.contains("edges") || !obj["edges"].is_array()) {
    Fail(source, line, "missing array field \"edges\"");
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (const auto& e : obj["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      Fail(source, line, "edge entries must be [u, v] integer pairs");
    }
    const int u = e[0].get<int>();
    const int v = e[1].get<int>();
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      Fail(source, line,
           "repeated edge {" + std::to_string(u) + "," + std::to_string(v) +
               "}; directed or multi-edge input is not supported");
    }
    edges.emplace_back(u, v);
  }
  return edges;
}

Graph GraphFromLine(const json& obj, const std::string& source, int line) {
  const int n = IntField(obj, "n", source, line);
  const auto edges = EdgesField(obj, source, line);
  try {
    return graph_from_edge_list(n, edges);
  } catch (const Error& e) {
    Fail(source, line, e.what());
  }
}

json ParseLine(const std::string& text, const std::string& source, int line) {
  try {
    json obj = json::parse(text);
    if (!obj.is_object()) Fail(source, line, "expected a JSON object");
    return obj;
  } catch (const json::parse_error& e) {
    Fail(source, line, std::string("invalid JSON: ") + e.what());
  }
}

bool IsBlank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

Dataset parse_dataset(std::istream& in, const std::string& source) {
  Dataset ds;
  std::string text;
  int line = 0;
  bool seen_graph = false;
  while (std::getline(in, text)) {
    ++line;
    if (IsBlank(text)) continue;
    const json obj = ParseLine(text, source, line);
    if (obj.contains("meta")) {
      if (seen_graph) Fail(source, line, "metadata line must come first");
      if (!obj["meta"].is_object()) Fail(source, line, "\"meta\" must be an object");
      for (const auto& [key, value] : obj["meta"].items()) {
        ds.metadata[key] = value.is_string() ? value.get<std::string>()
                                             : value.dump();
      }
      continue;
    }
    ds.graphs.push_back(GraphFromLine(obj, source, line));
    seen_graph = true;
  }
  return ds;
}

Dataset read_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open dataset file " + path.string());
  return parse_dataset(in, path.string());
}

std::string graph_to_json_line(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  json obj;
  obj["n"] = g.num_nodes();
  obj["edges"] = std::move(edges);
  return obj.dump();
}

void write_dataset(std::ostream& out, const Dataset& ds) {
  if (!ds.metadata.empty()) {
    json meta = json::object();
    for (const auto& [k, v] : ds.metadata) meta[k] = v;
    out << json{{"meta", meta}}.dump() << '\n';
  }
  for (const auto& g : ds.graphs) out << graph_to_json_line(g) << '\n';
}

void write_dataset(const std::filesystem::path& path, const Dataset& ds) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write dataset file " + path.string());
  write_dataset(out, ds);
}

std::vector<Pattern> parse_pattern_file(std::istream& in,
                                        const std::string& source) {
  std::vector<Pattern> out;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (IsBlank(text)) continue;
    const json obj = ParseLine(text, source, line);
    if (!obj.contains("name") || !obj["name"].is_string()) {
      Fail(source, line, "missing string field \"name\"");
    }
    Graph g = GraphFromLine(obj, source, line);
    std::optional<Edge> marks;
    if (obj.contains("marks")) {
      const auto& m = obj["marks"];
      if (!m.is_array() || m.size() != 2 || !m[0].is_number_integer() ||
          !m[1].is_number_integer()) {
        Fail(source, line, "\"marks\" must be a [c, d] integer pair");
      }
      marks = Edge{m[0].get<int>() - 1, m[1].get<int>() - 1};
    }
    try {
      out.push_back(make_pattern(std::move(g), obj["name"].get<std::string>(),
                                 marks));
    } catch (const Error& e) {
      Fail(source, line, e.what());
    }
  }
  return out;
}

std::vector<Pattern> read_pattern_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open pattern file " + path.string());
  return parse_pattern_file(in, path.string());
}

}  // namespace subdiff
