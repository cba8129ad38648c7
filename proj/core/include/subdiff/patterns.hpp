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

#ifndef SUBDIFF_PATTERNS_HPP_
#define SUBDIFF_PATTERNS_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subdiff/graph.hpp"

namespace subdiff {

// Built-in pattern vocabulary, in this order:
//
//   c3 .. c8     cycle 0-1-...-(k-1)-0
//   c3c4, c5c5,  two cycles of the named lengths sharing exactly the edge
//   c5c6, c6c6   {0,1}. The first cycle is 0-1-...-(a-1)-0; the second runs
//                0-1-a-(a+1)-...-(a+b-3)-0. k = a+b-2 nodes, m = a+b-1 edges.
//   l5, l6, l7   simple path 0-1-...-(k-1) with k = 5, 6, 7 nodes.
//
// The l-patterns count nodes, not edges. A pattern file (see
// read_pattern_file in io.hpp) can redefine any name.
const std::vector<Pattern>& pattern_library();

std::vector<std::string> pattern_names();

// Throws InputError naming every valid pattern when `name` is unknown.
const Pattern& find_pattern(std::string_view name);

// Resolves a list of names against `extra` first, then the built-in library.
std::vector<Pattern> resolve_patterns(std::span<const std::string> names,
                                      std::span<const Pattern> extra = {});

// Two cycles of lengths a and b glued along one edge, using the numbering
// documented above.
Graph make_fused_cycles(int a, int b);

}  // namespace subdiff

#endif  // SUBDIFF_PATTERNS_HPP_
