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

#include "gtest/gtest.h"
#include "subdiff/error.hpp"
#include "subdiff/isomorphism.hpp"
#include "subdiff/parallel.hpp"
#include "subdiff/patterns.hpp"
#include "test_util.hpp"

namespace subdiff {
namespace {

using testing::Edges;
using testing::RandomGraph;

Pattern Named(const char* name) { return find_pattern(name); }

TEST(CountSubgraphsTest, Examples) {
  EXPECT_EQ(count_subgraphs(make_complete(4), Named("c3")), Count{4});
  EXPECT_EQ(count_subgraphs(make_complete(4), Named("c4")), Count{3});
  EXPECT_EQ(count_subgraphs(make_cycle(6), Named("l5")), Count{6});
  EXPECT_EQ(count_subgraphs(make_complete(3), Named("c3")), Count{1});
  EXPECT_EQ(count_subgraphs(make_cycle(8), Named("c8")), Count{1});
}

TEST(CountSubgraphsTest, PatternLargerThanHost) {
  EXPECT_EQ(count_subgraphs(make_complete(3), Named("c4")), Count{0});
}

TEST(CountSubgraphsTest, WideCountFormatting) {
  Count big = 1;
  for (int i = 0; i < 12; ++i) big *= static_cast<Count>(64 - i);
  EXPECT_GT(big, Count{~std::uint64_t{0}});
  EXPECT_EQ(to_string(big), "1573144097507348889600");
  EXPECT_EQ(to_string(Count{0}), "0");
  EXPECT_EQ(count_injective_homs(make_complete(64), Named("c3")),
            Count{64 * 63 * 62});
}

TEST(CountSubgraphsTest, CapacityBound) {
  const Pattern big = make_pattern(make_path(13), "p13");
  EXPECT_THROW(count_subgraphs(make_complete(14), big), CapacityError);
  EXPECT_THROW(naive_count_oracle(Graph(10), Named("c3")), CapacityError);
}

TEST(CountInjectiveHomsTest, Examples) {
  EXPECT_EQ(count_injective_homs(make_complete(3), Named("c3")), Count{6});
  EXPECT_EQ(count_injective_homs(Graph(6), Named("c4")), Count{0});
  EXPECT_EQ(count_injective_homs(make_complete(4), Named("c4")), Count{24});
}

TEST(CountRootedTest, Examples) {
  const Pattern edge = make_pattern(make_complete(2), "e", Edge{0, 1});
  EXPECT_EQ(count_rooted(make_complete(3), 0, 1, edge), Count{1});
  const Pattern tri = make_pattern(make_cycle(3), "t", Edge{0, 1});
  EXPECT_EQ(count_rooted(make_complete(3), 0, 1, tri), Count{1});
  // Pinning both endpoints of an edge fixes the traversal direction, so
  // only one map remains; summing both orientations gives 2.
  const Pattern c6 = make_pattern(make_cycle(6), "c6m", Edge{0, 1});
  EXPECT_EQ(count_rooted(make_cycle(6), 0, 1, c6), Count{1});
  EXPECT_EQ(count_rooted(make_cycle(6), 0, 1, c6) +
                count_rooted(make_cycle(6), 1, 0, c6),
            Count{2});
}

TEST(CountRootedTest, Contracts) {
  EXPECT_THROW(count_rooted(make_complete(3), 0, 1, Named("c3")),
               ContractError);
  const Pattern tri = make_pattern(make_cycle(3), "t", Edge{0, 1});
  EXPECT_THROW(count_rooted(make_complete(3), 1, 1, tri), ContractError);
}

TEST(CountRootedTest, SumOverEdgesEqualsHoms) {
  const Pattern tri = make_pattern(make_cycle(3), "t", Edge{0, 1});
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = RandomGraph(7, 0.5, rng);
    Count sum = 0;
    for (int i = 0; i < g.num_nodes(); ++i) {
      for (int j = 0; j < g.num_nodes(); ++j) {
        if (g.has_edge(i, j)) sum += count_rooted(g, i, j, tri);
      }
    }
    EXPECT_EQ(sum, count_injective_homs(g, Named("c3")));
  }
}

TEST(CountRootedTest, SumOverAllPairsEqualsHoms) {
  // Without the edge condition the identity holds for any marked pattern.
  Rng rng(43);
  for (const char* name : {"c4", "c3c4", "l5"}) {
    const Pattern base = Named(name);
    const Pattern marked = make_pattern(base.graph, name, Edge{0, 2});
    for (int trial = 0; trial < 5; ++trial) {
      const Graph g = RandomGraph(7, 0.5, rng);
      Count sum = 0;
      for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
          if (i != j) sum += count_rooted(g, i, j, marked);
        }
      }
      EXPECT_EQ(sum, count_injective_homs(g, base)) << name;
    }
  }
}

TEST(CountPropertyTest, MatchesOracleOnRandomGraphs) {
  Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = RandomGraph(3 + trial % 6, 0.45, rng);
    for (const auto& p : pattern_library()) {
      ASSERT_EQ(count_subgraphs(g, p), naive_count_oracle(g, p))
          << p.name << " trial " << trial;
    }
  }
}

TEST(CountPropertyTest, HomsEqualAutTimesCount) {
  Rng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = RandomGraph(9, 0.5, rng);
    for (const auto& p : pattern_library()) {
      EXPECT_EQ(count_injective_homs(g, p),
                Count{automorphism_count(p.graph)} * count_subgraphs(g, p))
          << p.name;
    }
  }
}

TEST(CountPropertyTest, InvariantUnderRelabeling) {
  Rng rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = RandomGraph(10, 0.4, rng);
    const Graph h = g.Permuted(random_permutation(10, rng));
    for (const auto& p : pattern_library()) {
      EXPECT_EQ(count_subgraphs(g, p), count_subgraphs(h, p)) << p.name;
    }
  }
}

TEST(CountDistributionTest, Examples) {
  Dataset triangles;
  triangles.graphs.assign(10, make_complete(3));
  const auto d1 = count_distribution(triangles, Named("c3"));
  EXPECT_EQ(d1.mass, (std::map<std::uint64_t, double>{{1, 1.0}}));
  EXPECT_EQ(d1.sample_size, 10u);

  Dataset empty_graphs;
  empty_graphs.graphs.assign(5, Graph(3));
  EXPECT_EQ(count_distribution(empty_graphs, Named("c3")).mass,
            (std::map<std::uint64_t, double>{{0, 1.0}}));

  Dataset mixed;
  mixed.graphs = {make_complete(3), make_complete(4)};
  const auto d3 = count_distribution(mixed, Named("c3"));
  EXPECT_EQ(d3.mass, (std::map<std::uint64_t, double>{{1, 0.5}, {4, 0.5}}));
  EXPECT_EQ(d3.frequency, (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {4, 1}}));
}

TEST(CountDistributionTest, EmptyDatasetRejected) {
  EXPECT_THROW(count_distribution(Dataset{}, Named("c3")), InputError);
}

TEST(CountDistributionTest, IndependentOfThreadCount) {
  Rng rng(61);
  Dataset ds;
  for (int i = 0; i < 40; ++i) ds.graphs.push_back(RandomGraph(9, 0.4, rng));
  set_thread_count(1);
  const auto serial = count_per_graph(ds, Named("c4"));
  set_thread_count(4);
  const auto parallel = count_per_graph(ds, Named("c4"));
  set_thread_count(0);
  EXPECT_EQ(serial, parallel);
}

}  // namespace
}  // namespace subdiff
