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

#ifndef SUBDIFF_GRAPH_HPP_
#define SUBDIFF_GRAPH_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace subdiff {

// Largest node count any Graph may have. Adjacency rows are single 64-bit
// masks.
inline constexpr int kMaxNodes = 64;

using NodeMask = std::uint64_t;
using Edge = std::pair<int, int>;

// Simple undirected unlabeled graph on nodes 0..n-1. Immutable once built.
//
// All library APIs use 0-based node indices. The 1-based convention of the
// dataset file format and of graph_from_edge_list() is confined to the I/O
// boundary.
class Graph {
 public:
  // Edgeless graph on `num_nodes` nodes. num_nodes may be 0 only for the
  // empty monomial graph used by the polynomial module.
  explicit Graph(int num_nodes = 0);

  // Builds from 0-based edges. Duplicates (in either orientation) are merged.
  // Throws InputError on self-loops or out-of-range endpoints.
  static Graph FromEdges(int num_nodes, std::span<const Edge> edges);

  int num_nodes() const { return num_nodes_; }
  int num_edges() const { return num_edges_; }

  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1u; }
  NodeMask neighbors(int u) const { return rows_[u]; }
  int degree(int u) const;

  // Mask with the low num_nodes() bits set.
  NodeMask all_nodes() const;

  // Sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  // Sorted degree sequence, largest first.
  std::vector<int> degree_sequence() const;

  // Graph whose node perm[u] plays the role of node u in *this.
  Graph Permuted(std::span<const int> perm) const;

  // Copy with the edge {u, v} removed (no-op if absent).
  Graph WithoutEdge(int u, int v) const;

  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  int num_nodes_ = 0;
  int num_edges_ = 0;
  std::vector<NodeMask> rows_;
};

// 1-based edge list entry point used by the dataset reader and the CLI.
// Throws InputError on endpoints outside [1, n] or self-loops.
Graph graph_from_edge_list(int n, std::span<const Edge> edges_one_based);

// Frequently used shapes.
Graph make_cycle(int k);
Graph make_path(int k);
Graph make_complete(int k);

// A small named graph with an optional ordered pair of marked (root) nodes.
struct Pattern {
  Graph graph;
  std::string name;
  std::optional<Edge> marks;

  int num_nodes() const { return graph.num_nodes(); }
  int num_edges() const { return graph.num_edges(); }
};

// Validates marks (distinct, in range). Throws ContractError.
Pattern make_pattern(Graph graph, std::string name = {},
                     std::optional<Edge> marks = std::nullopt);

struct Dataset {
  std::vector<Graph> graphs;
  std::map<std::string, std::string> metadata;

  std::size_t size() const { return graphs.size(); }
  bool empty() const { return graphs.empty(); }
};

}  // namespace subdiff

#endif  // SUBDIFF_GRAPH_HPP_
