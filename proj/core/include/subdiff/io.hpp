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

#ifndef SUBDIFF_IO_HPP_
#define SUBDIFF_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "subdiff/graph.hpp"

namespace subdiff {

// Dataset files are JSON Lines with one graph per line,
//
//   {"n": 4, "edges": [[1, 2], [2, 3]]}
//
// using 1-based node indices, optionally preceded by a metadata line
// {"meta": {...}}. Blank lines are skipped. Files are strict: a repeated pair
// ({1,2} twice, or [1,2] and [2,1]) is rejected as a multi-edge/directed
// input. Parse failures throw InputError prefixed with "<source>:<line>:".
Dataset parse_dataset(std::istream& in, const std::string& source = "<stream>");
Dataset read_dataset(const std::filesystem::path& path);

// Writes the metadata line (if any) then one line per graph with edges
// sorted. Output is byte-stable for equal datasets.
void write_dataset(std::ostream& out, const Dataset& ds);
void write_dataset(const std::filesystem::path& path, const Dataset& ds);

std::string graph_to_json_line(const Graph& g);

// Pattern definition files: JSON Lines with
//   {"name": "l5", "n": 5, "edges": [[1,2],[2,3],[3,4],[4,5]], "marks": [1,5]}
// where "marks" is optional and 1-based.
std::vector<Pattern> read_pattern_file(const std::filesystem::path& path);
std::vector<Pattern> parse_pattern_file(std::istream& in,
                                        const std::string& source);

}  // namespace subdiff

#endif  // SUBDIFF_IO_HPP_
