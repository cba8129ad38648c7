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

#ifndef SUBDIFF_ISOMORPHISM_HPP_
#define SUBDIFF_ISOMORPHISM_HPP_

#include <cstdint>
#include <string>

#include "subdiff/graph.hpp"

namespace subdiff {

// Largest node count accepted by automorphism_count().
inline constexpr int kMaxAutomorphismNodes = 12;

// True iff some bijection of node indices maps g1's edge set onto g2's.
// Prunes by degree sequence and jointly refined node colours, then searches
// bijections exhaustively.
bool are_isomorphic(const Graph& g1, const Graph& g2);

// Number of adjacency-preserving permutations of the node set, by exhaustive
// enumeration with degree pruning. Throws CapacityError above 12 nodes.
std::uint64_t automorphism_count(const Graph& g);

// Byte string that is equal for two graphs iff they are isomorphic.
//
// Layout: one byte holding n, then the strict upper triangle of the adjacency
// matrix under the canonical ordering, row-major, packed 8 bits per byte
// (most significant bit first). The canonical ordering is the one yielding
// the lexicographically smallest row sequence over all leaves of an
// individualization-refinement search tree. Interchangeable twin nodes are
// explored once.
std::string canonical_form(const Graph& g);

// Lowercase hex rendering of canonical_form(), convenient for JSON/logs.
std::string canonical_hex(const Graph& g);

}  // namespace subdiff

#endif  // SUBDIFF_ISOMORPHISM_HPP_
