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

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "subdiff/count.hpp"
#include "subdiff/diffusion.hpp"
#include "subdiff/isomorphism.hpp"
#include "subdiff/patterns.hpp"
#include "subdiff/polynomial.hpp"
#include "subdiff/random.hpp"

namespace {

using namespace subdiff;

Graph RandomGraph(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(n, edges);
}

const std::vector<std::string>& BenchPatterns() {
  static const std::vector<std::string> names = {"c3", "c4", "c5", "c6",
                                                 "c3c4", "l5", "l7"};
  return names;
}

void BM_CountSubgraphs(benchmark::State& state) {
  const Pattern& p = find_pattern(BenchPatterns()[static_cast<std::size_t>(state.range(0))]);
  const Graph g = RandomGraph(static_cast<int>(state.range(1)), 0.15, 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_subgraphs(g, p));
  state.SetLabel(p.name);
}
BENCHMARK(BM_CountSubgraphs)
    ->ArgsProduct({{0, 1, 2, 3, 4, 5, 6}, {20, 40}})
    ->Unit(benchmark::kMicrosecond);

void BM_NaiveOracle(benchmark::State& state) {
  const Pattern& p = find_pattern("c5");
  const Graph g = RandomGraph(8, 0.3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(naive_count_oracle(g, p));
}
BENCHMARK(BM_NaiveOracle)->Unit(benchmark::kMicrosecond);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = RandomGraph(static_cast<int>(state.range(0)), 0.3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_InvariantBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  std::normal_distribution<double> normal;
  SymMatrix w(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) w.set(u, v, normal(rng));
  }
  const Pattern& p = find_pattern("c5");
  for (auto _ : state) benchmark::DoNotOptimize(invariant_basis(w, p));
}
BENCHMARK(BM_InvariantBasis)->Arg(6)->Arg(10)->Arg(16);

PosteriorModel MakeModel(int n) {
  Dataset ds;
  for (int i = 0; i < 4; ++i) ds.graphs.push_back(RandomGraph(n, 0.4, 10 + i));
  ScoreConfig cfg;
  cfg.perm_policy = PermPolicy::kExhaustive;
  return PosteriorModel(ds, n, cfg);
}

void BM_ScoreDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PosteriorModel model = MakeModel(n);
  const NoiseSchedule sched;
  Rng rng(5);
  const SymMatrix w = perturb(RandomGraph(n, 0.4, 10), 0.5, sched, rng);
  const ScheduleValue s = schedule(sched, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(model.score_direct(w, s));
  state.counters["templates"] = static_cast<double>(model.num_templates());
}
BENCHMARK(BM_ScoreDirect)->Arg(4)->Arg(6)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_ScoreSeries(benchmark::State& state) {
  const PosteriorModel model = MakeModel(5);
  const NoiseSchedule sched;
  Rng rng(6);
  const SymMatrix w = perturb(RandomGraph(5, 0.4, 10), 0.7, sched, rng);
  const ScheduleValue s = schedule(sched, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(model.score_series(w, s));
}
BENCHMARK(BM_ScoreSeries)->Unit(benchmark::kMicrosecond);

void BM_ReverseSample(benchmark::State& state) {
  Dataset ds;
  ds.graphs = {make_cycle(6)};
  ScoreConfig cfg;
  cfg.perm_policy = PermPolicy::kExhaustive;
  const PosteriorModel model(ds, 6, cfg);
  SampleOptions opts;
  opts.steps = 500;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    benchmark::DoNotOptimize(reverse_sample(model, NoiseSchedule{}, opts, rng));
  }
}
BENCHMARK(BM_ReverseSample)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
