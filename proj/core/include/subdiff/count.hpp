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

#ifndef SUBDIFF_COUNT_HPP_
#define SUBDIFF_COUNT_HPP_

#include <cstdint>
#include <map>
#include <string>

#include "subdiff/graph.hpp"

namespace subdiff {

// Exact occurrence counts. Injective-map counts on 64-node hosts with
// 12-node patterns can exceed 2^64, so all counting accumulates in 128 bits.
__extension__ typedef unsigned __int128 Count;

inline constexpr int kMaxPatternNodes = 12;
inline constexpr int kMaxOracleHostNodes = 9;

std::string to_string(Count c);

// Number of injective maps from pattern nodes to g's nodes under which every
// pattern edge lands on an edge of g.
Count count_injective_homs(const Graph& g, const Pattern& p);

// Number of (non-induced) subgraphs of g isomorphic to p.graph, i.e.
// count_injective_homs / |Aut(p)|.
Count count_subgraphs(const Graph& g, const Pattern& p);

// Injective edge-preserving maps with the pattern's marks (c, d) pinned to
// host nodes (i, j). No automorphism normalisation is applied.
// Throws ContractError if p has no marks or i == j.
Count count_rooted(const Graph& g, int i, int j, const Pattern& p);

// Brute-force reference for count_subgraphs: enumerates every injective map
// without pruning, checks edges at the leaves, and divides by
// automorphism_count. Host graphs are limited to 9 nodes.
Count naive_count_oracle(const Graph& g, const Pattern& p);

// Empirical distribution of a pattern's subgraph count over a dataset.
struct CountDistribution {
  // count value -> number of graphs with that count.
  std::map<std::uint64_t, std::uint64_t> frequency;
  // count value -> probability; sums to 1.
  std::map<std::uint64_t, double> mass;
  std::uint64_t sample_size = 0;

  static CountDistribution FromFrequencies(
      std::map<std::uint64_t, std::uint64_t> frequency);
};

// Counts p in every graph (in parallel) and merges in dataset order.
// Throws InputError on an empty dataset.
CountDistribution count_distribution(const Dataset& ds, const Pattern& p);

// Per-graph counts in dataset order; the building block of
// count_distribution.
std::vector<std::uint64_t> count_per_graph(const Dataset& ds,
                                           const Pattern& p);

}  // namespace subdiff

#endif  // SUBDIFF_COUNT_HPP_
