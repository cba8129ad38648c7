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

#ifndef SUBDIFF_TESTS_TEST_UTIL_HPP_
#define SUBDIFF_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "subdiff/graph.hpp"
#include "subdiff/random.hpp"
#include "subdiff/sym_matrix.hpp"

namespace subdiff::testing {

inline Graph RandomGraph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(n, e);
}

inline SymMatrix RandomSymMatrix(int n, Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  SymMatrix w(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) w.set(u, v, normal(rng));
  }
  return w;
}

inline std::vector<std::vector<int>> AllPerms(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Graph Edges(int n, std::vector<Edge> e) { return Graph::FromEdges(n, e); }

}  // namespace subdiff::testing

#endif  // SUBDIFF_TESTS_TEST_UTIL_HPP_
