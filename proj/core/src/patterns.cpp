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

#include "subdiff/patterns.hpp"

#include "subdiff/error.hpp"

namespace subdiff {

Graph make_fused_cycles(int a, int b) {
  const int k = a + b - 2;
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i) e.emplace_back(i, (i + 1) % a);
  // Second cycle: 1 -> a -> a+1 -> ... -> k-1 -> 0, closing over edge {0,1}.
  int prev = 1;
  for (int v = a; v < k; ++v) {
    e.emplace_back(prev, v);
    prev = v;
  }
  e.emplace_back(prev, 0);
  return Graph::FromEdges(k, e);
}

const std::vector<Pattern>& pattern_library() {
  static const std::vector<Pattern> library = [] {
    std::vector<Pattern> lib;
    for (int k = 3; k <= 8; ++k) {
      lib.push_back(make_pattern(make_cycle(k), "c" + std::to_string(k)));
    }
    const std::pair<int, int> fused[] = {{3, 4}, {5, 5}, {5, 6}, {6, 6}};
    for (const auto& [a, b] : fused) {
      lib.push_back(make_pattern(make_fused_cycles(a, b),
                                 "c" + std::to_string(a) + "c" +
                                     std::to_string(b)));
    }
    for (int k = 5; k <= 7; ++k) {
      lib.push_back(make_pattern(make_path(k), "l" + std::to_string(k)));
    }
    return lib;
  }();
  return library;
}

std::vector<std::string> pattern_names() {
  std::vector<std::string> names;
  for (const auto& p : pattern_library()) names.push_back(p.name);
  return names;
}

const Pattern& find_pattern(std::string_view name) {
  for (const auto& p : pattern_library()) {
    if (p.name == name) return p;
  }
  std::string valid;
  for (const auto& n : pattern_names()) {
    if (!valid.empty()) valid += ", ";
    valid += n;
  }
  throw InputError("unknown pattern '" + std::string(name) +
                   "'; valid names: " + valid);
}

std::vector<Pattern> resolve_patterns(std::span<const std::string> names,
                                      std::span<const Pattern> extra) {
  std::vector<Pattern> out;
  for (const auto& name : names) {
    const Pattern* hit = nullptr;
    for (const auto& p : extra) {
      if (p.name == name) hit = &p;
    }
    out.push_back(hit ? *hit : find_pattern(name));
  }
  return out;
}

}  // namespace subdiff
