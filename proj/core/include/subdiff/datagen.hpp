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

#ifndef SUBDIFF_DATAGEN_HPP_
#define SUBDIFF_DATAGEN_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "subdiff/graph.hpp"

namespace subdiff {

enum class Decoration {
  // Extra nodes stay isolated.
  kNone,
  // Each extra node attaches to a uniformly random earlier node.
  kTree,
};

struct PlantOptions {
  int num_nodes = 0;
  int count = 1;
  Decoration decoration = Decoration::kTree;
  std::uint64_t seed = 0;
  // Patterns whose count must equal their count inside the planted pattern
  // alone. Unset means default_monitored_patterns().
  std::optional<std::vector<Pattern>> monitored;
  int max_retries = 1000;
};

// Cycle-bearing library patterns (everything except the l-paths).
std::vector<Pattern> default_monitored_patterns();

// Graphs containing exactly one copy of `p`. Each graph plants p on random
// node labels, decorates, then verifies with the counting engine:
// count_subgraphs(g, p) == 1 and, for every monitored q other than p,
// count_subgraphs(g, q) == count_subgraphs(p.graph, q). Violations are
// resampled up to max_retries times. Graph i draws from
// Rng(derive_seed(seed, i)). Metadata records every parameter.
//
// Throws InputError for count < 1 or k > n, GenerationError when a graph
// exhausts its retry budget.
Dataset plant_pattern_dataset(const Pattern& p, const PlantOptions& opts);

const char* to_string(Decoration d);

}  // namespace subdiff

#endif  // SUBDIFF_DATAGEN_HPP_
