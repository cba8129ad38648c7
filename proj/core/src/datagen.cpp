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

#include "subdiff/datagen.hpp"

#include <string>

#include "subdiff/count.hpp"
#include "subdiff/error.hpp"
#include "subdiff/parallel.hpp"
#include "subdiff/patterns.hpp"
#include "subdiff/random.hpp"

namespace subdiff {
namespace {

Graph Draw(const Pattern& p, const PlantOptions& opts, Rng& rng) {
  const int n = opts.num_nodes;
  const int k = p.num_nodes();
  std::vector<Edge> edges = p.graph.edges();
  if (opts.decoration == Decoration::kTree) {
    for (int v = k; v < n; ++v) {
      const auto parent = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
      edges.emplace_back(parent, v);
    }
  }
  const std::vector<int> labels = random_permutation(n, rng);
  for (auto& [u, v] : edges) {
    u = labels[u];
    v = labels[v];
  }
  return Graph::FromEdges(n, edges);
}

}  // namespace

const char* to_string(Decoration d) {
  return d == Decoration::kTree ? "tree" : "none";
}

std::vector<Pattern> default_monitored_patterns() {
  std::vector<Pattern> out;
  for (const auto& p : pattern_library()) {
    if (p.name.front() == 'c') out.push_back(p);
  }
  return out;
}

Dataset plant_pattern_dataset(const Pattern& p, const PlantOptions& opts) {
  if (opts.count < 1) throw InputError("graph count must be >= 1");
  if (p.num_nodes() > opts.num_nodes) {
    throw InputError("pattern has " + std::to_string(p.num_nodes()) +
                     " nodes but graphs have only " +
                     std::to_string(opts.num_nodes));
  }
  if (opts.num_nodes > kMaxNodes) {
    throw InputError("graphs are limited to " + std::to_string(kMaxNodes) +
                     " nodes");
  }
  const std::vector<Pattern> monitored =
      opts.monitored ? *opts.monitored : default_monitored_patterns();
  // Tally of each monitored pattern inside the bare planted pattern.
  std::vector<Count> expected;
  for (const auto& q : monitored) {
    expected.push_back(q.num_nodes() <= p.num_nodes()
                           ? count_subgraphs(p.graph, q)
                           : Count{0});
  }

  Dataset ds;
  ds.graphs.resize(static_cast<std::size_t>(opts.count));
  std::vector<int> attempts(ds.graphs.size(), 0);
  parallel_for(ds.graphs.size(), [&](std::size_t i) {
    Rng rng(derive_seed(opts.seed, i));
    for (int attempt = 1; attempt <= opts.max_retries + 1; ++attempt) {
      Graph g = Draw(p, opts, rng);
      bool ok = count_subgraphs(g, p) == 1;
      for (std::size_t m = 0; ok && m < monitored.size(); ++m) {
        if (monitored[m].name == p.name) continue;
        ok = count_subgraphs(g, monitored[m]) == expected[m];
      }
      if (ok) {
        ds.graphs[i] = std::move(g);
        attempts[i] = attempt;
        return;
      }
    }
    throw GenerationError("graph " + std::to_string(i) + ": no valid draw for " +
                          p.name + " on " + std::to_string(opts.num_nodes) +
                          " nodes after " + std::to_string(opts.max_retries) +
                          " retries (decoration " + to_string(opts.decoration) +
                          ")");
  });

  std::uint64_t total_attempts = 0;
  for (int a : attempts) total_attempts += static_cast<std::uint64_t>(a);
  std::string monitor_names;
  for (const auto& q : monitored) {
    if (!monitor_names.empty()) monitor_names += ",";
    monitor_names += q.name;
  }
  ds.metadata = {
      {"generator", "plant_pattern_dataset"},
      {"pattern", p.name},
      {"n", std::to_string(opts.num_nodes)},
      {"count", std::to_string(opts.count)},
      {"decoration", to_string(opts.decoration)},
      {"attachment", "uniform"},
      {"relabel", "uniform"},
      {"seed", std::to_string(opts.seed)},
      {"monitored", monitor_names},
      {"max_retries", std::to_string(opts.max_retries)},
      {"draws", std::to_string(total_attempts)},
  };
  return ds;
}

}  // namespace subdiff
