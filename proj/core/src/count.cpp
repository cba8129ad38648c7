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

#include "subdiff/count.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "subdiff/error.hpp"
#include "subdiff/isomorphism.hpp"
#include "subdiff/parallel.hpp"

namespace subdiff {
namespace {

void CheckPatternSize(const Pattern& p) {
  if (p.num_nodes() > kMaxPatternNodes) {
    throw CapacityError("pattern has " + std::to_string(p.num_nodes()) +
                        " nodes; at most " + std::to_string(kMaxPatternNodes) +
                        " supported");
  }
}

// Backtracking matcher. Pattern nodes are placed in an order where each node
// (after the first of its component) has at least one placed neighbour, so
// candidate sets are intersections of host neighbourhoods.
class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern, std::span<const int> pinned)
      : host_(host), pattern_(pattern) {
    const int k = pattern.num_nodes();
    NodeMask placed = 0;
    for (int u : pinned) {
      order_.push_back(u);
      placed |= NodeMask{1} << u;
    }
    while (static_cast<int>(order_.size()) < k) {
      int best = -1;
      int best_links = -1;
      for (int u = 0; u < k; ++u) {
        if ((placed >> u) & 1u) continue;
        const int links = std::popcount(pattern.neighbors(u) & placed);
        if (best < 0 || links > best_links ||
            (links == best_links && pattern.degree(u) > pattern.degree(best))) {
          best = u;
          best_links = links;
        }
      }
      order_.push_back(best);
      placed |= NodeMask{1} << best;
    }
    // Earlier-placed pattern neighbours of each slot.
    back_links_.resize(static_cast<std::size_t>(k));
    for (int d = 0; d < k; ++d) {
      const int u = order_[d];
      for (int e = 0; e < d; ++e) {
        if (pattern.has_edge(u, order_[e])) back_links_[d].push_back(e);
      }
    }
    image_.assign(static_cast<std::size_t>(k), -1);
  }

  // Counts completions with the first `fixed.size()` slots set to `fixed`.
  Count Run(std::span<const int> fixed) {
    NodeMask used = 0;
    for (std::size_t d = 0; d < fixed.size(); ++d) {
      const int v = fixed[d];
      const int u = order_[d];
      if ((used >> v) & 1u) return 0;
      if (host_.degree(v) < pattern_.degree(u)) return 0;
      for (int e : back_links_[d]) {
        if (!host_.has_edge(v, image_[e])) return 0;
      }
      image_[d] = v;
      used |= NodeMask{1} << v;
    }
    return Extend(static_cast<int>(fixed.size()), used);
  }

 private:
  Count Extend(int depth, NodeMask used) {
    const int k = pattern_.num_nodes();
    if (depth == k) return 1;
    NodeMask candidates = host_.all_nodes() & ~used;
    for (int e : back_links_[depth]) candidates &= host_.neighbors(image_[e]);
    const int need = pattern_.degree(order_[depth]);
    Count total = 0;
    for (; candidates != 0; candidates &= candidates - 1) {
      const int v = std::countr_zero(candidates);
      if (host_.degree(v) < need) continue;
      image_[depth] = v;
      total += Extend(depth + 1, used | (NodeMask{1} << v));
    }
    return total;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<int> order_;
  std::vector<std::vector<int>> back_links_;
  std::vector<int> image_;
};

// Enumerates all injective maps of k pattern nodes into n host nodes and
// checks every edge at the leaf. No pruning of any kind.
Count NaiveEnumerate(const Graph& g, int k, const std::vector<Edge>& edges,
                     std::vector<int>& image, std::vector<bool>& used,
                     int depth) {
  if (depth == k) {
    for (const auto& [a, b] : edges) {
      if (!g.has_edge(image[a], image[b])) return 0;
    }
    return 1;
  }
  Count total = 0;
  for (int v = 0; v < g.num_nodes(); ++v) {
    if (used[v]) continue;
    used[v] = true;
    image[depth] = v;
    total += NaiveEnumerate(g, k, edges, image, used, depth + 1);
    used[v] = false;
  }
  return total;
}

std::uint64_t Narrow(Count c) {
  if (c > std::numeric_limits<std::uint64_t>::max()) {
    throw CapacityError("subgraph count " + to_string(c) +
                        " does not fit a 64-bit histogram key");
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace

std::string to_string(Count c) {
  if (c == 0) return "0";
  std::string s;
  while (c > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(c % 10)));
    c /= 10;
  }
  return {s.rbegin(), s.rend()};
}

Count count_injective_homs(const Graph& g, const Pattern& p) {
  CheckPatternSize(p);
  if (p.num_nodes() > g.num_nodes()) return 0;
  if (p.num_nodes() == 0) return 1;
  Matcher matcher(g, p.graph, {});
  return matcher.Run({});
}

Count count_subgraphs(const Graph& g, const Pattern& p) {
  const Count homs = count_injective_homs(g, p);
  return homs / automorphism_count(p.graph);
}

Count count_rooted(const Graph& g, int i, int j, const Pattern& p) {
  if (!p.marks) throw ContractError("count_rooted requires a marked pattern");
  if (i == j) throw ContractError("count_rooted requires distinct roots");
  if (i < 0 || j < 0 || i >= g.num_nodes() || j >= g.num_nodes()) {
    throw ContractError("root node outside host graph");
  }
  CheckPatternSize(p);
  if (p.num_nodes() > g.num_nodes()) return 0;
  const int pinned[] = {p.marks->first, p.marks->second};
  Matcher matcher(g, p.graph, pinned);
  const int fixed[] = {i, j};
  return matcher.Run(fixed);
}

Count naive_count_oracle(const Graph& g, const Pattern& p) {
  if (g.num_nodes() > kMaxOracleHostNodes) {
    throw CapacityError("naive oracle supports hosts of at most " +
                        std::to_string(kMaxOracleHostNodes) + " nodes");
  }
  CheckPatternSize(p);
  if (p.num_nodes() > g.num_nodes()) return 0;
  std::vector<int> image(static_cast<std::size_t>(p.num_nodes()), -1);
  std::vector<bool> used(static_cast<std::size_t>(g.num_nodes()), false);
  const Count maps =
      NaiveEnumerate(g, p.num_nodes(), p.graph.edges(), image, used, 0);
  return maps / automorphism_count(p.graph);
}

CountDistribution CountDistribution::FromFrequencies(
    std::map<std::uint64_t, std::uint64_t> frequency) {
  CountDistribution d;
  d.frequency = std::move(frequency);
  for (const auto& [value, f] : d.frequency) d.sample_size += f;
  for (const auto& [value, f] : d.frequency) {
    d.mass[value] =
        static_cast<double>(f) / static_cast<double>(d.sample_size);
  }
  return d;
}

std::vector<std::uint64_t> count_per_graph(const Dataset& ds,
                                           const Pattern& p) {
  std::vector<std::uint64_t> counts(ds.size());
  parallel_for(ds.size(), [&](std::size_t i) {
    counts[i] = Narrow(count_subgraphs(ds.graphs[i], p));
  });
  return counts;
}

CountDistribution count_distribution(const Dataset& ds, const Pattern& p) {
  if (ds.empty()) throw InputError("count_distribution on an empty dataset");
  std::map<std::uint64_t, std::uint64_t> freq;
  for (std::uint64_t c : count_per_graph(ds, p)) ++freq[c];
  return CountDistribution::FromFrequencies(std::move(freq));
}

}  // namespace subdiff
