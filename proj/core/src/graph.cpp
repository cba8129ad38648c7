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

#include "subdiff/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "subdiff/error.hpp"

namespace subdiff {

Graph::Graph(int num_nodes) : num_nodes_(num_nodes) {
  if (num_nodes < 0 || num_nodes > kMaxNodes) {
    throw CapacityError("graph node count " + std::to_string(num_nodes) +
                        " outside [0, " + std::to_string(kMaxNodes) + "]");
  }
  rows_.assign(static_cast<std::size_t>(num_nodes), 0);
}

Graph Graph::FromEdges(int num_nodes, std::span<const Edge> edges) {
  Graph g(num_nodes);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside [0, " +
                       std::to_string(num_nodes) + ")");
    }
    if (u == v) {
      throw InputError("self-loop at node " + std::to_string(u));
    }
    if (!g.has_edge(u, v)) {
      g.rows_[u] |= NodeMask{1} << v;
      g.rows_[v] |= NodeMask{1} << u;
      ++g.num_edges_;
    }
  }
  return g;
}

int Graph::degree(int u) const { return std::popcount(rows_[u]); }

NodeMask Graph::all_nodes() const {
  return num_nodes_ == 64 ? ~NodeMask{0} : (NodeMask{1} << num_nodes_) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (int u = 0; u < num_nodes_; ++u) {
    for (int v = u + 1; v < num_nodes_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> deg(static_cast<std::size_t>(num_nodes_));
  for (int u = 0; u < num_nodes_; ++u) deg[u] = degree(u);
  std::sort(deg.begin(), deg.end(), std::greater<>());
  return deg;
}

Graph Graph::Permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != num_nodes_) {
    throw ContractError("permutation size does not match node count");
  }
  std::vector<Edge> mapped;
  mapped.reserve(static_cast<std::size_t>(num_edges_));
  for (const auto& [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
  return FromEdges(num_nodes_, mapped);
}

Graph Graph::WithoutEdge(int u, int v) const {
  Graph g = *this;
  if (has_edge(u, v)) {
    g.rows_[u] &= ~(NodeMask{1} << v);
    g.rows_[v] &= ~(NodeMask{1} << u);
    --g.num_edges_;
  }
  return g;
}

bool Graph::is_connected() const {
  if (num_nodes_ <= 1) return true;
  NodeMask seen = 1;
  NodeMask frontier = 1;
  while (frontier != 0) {
    NodeMask next = 0;
    for (NodeMask f = frontier; f != 0; f &= f - 1) {
      next |= rows_[std::countr_zero(f)];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all_nodes();
}

Graph graph_from_edge_list(int n, std::span<const Edge> edges_one_based) {
  if (n <= 0) throw InputError("node count must be positive");
  std::vector<Edge> zero_based;
  zero_based.reserve(edges_one_based.size());
  for (const auto& [u, v] : edges_one_based) {
    if (u < 1 || v < 1 || u > n || v > n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside [1, " + std::to_string(n) +
                       "]");
    }
    zero_based.emplace_back(u - 1, v - 1);
  }
  return Graph::FromEdges(n, zero_based);
}

Graph make_cycle(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Graph::FromEdges(k, e);
}

Graph make_path(int k) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph::FromEdges(k, e);
}

Graph make_complete(int k) {
  std::vector<Edge> e;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) e.emplace_back(u, v);
  }
  return Graph::FromEdges(k, e);
}

Pattern make_pattern(Graph graph, std::string name, std::optional<Edge> marks) {
  if (marks) {
    const auto [c, d] = *marks;
    const int k = graph.num_nodes();
    if (c == d || c < 0 || d < 0 || c >= k || d >= k) {
      throw ContractError("pattern marks must be two distinct nodes in range");
    }
  }
  return Pattern{std::move(graph), std::move(name), marks};
}

}  // namespace subdiff
