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

#ifndef SUBDIFF_EVALUATOR_HPP_
#define SUBDIFF_EVALUATOR_HPP_

#include <map>
#include <span>
#include <string>

#include "subdiff/count.hpp"
#include "subdiff/graph.hpp"

namespace subdiff {

// 1/2 sum_i |p(i) - q(i)| over the union of supports. When both histograms
// carry integer frequencies the sum is formed exactly and divided once, so
// e.g. a point mass against 70 hits in 100 gives exactly 0.3. Throws
// ContractError if either mass does not sum to 1 within 1e-9 or has a
// negative entry.
double tv_distance(const CountDistribution& p, const CountDistribution& q);

enum class NoveltyMode {
  // Novel iff isomorphic to no training graph.
  kIsomorphism,
  // Novel iff no training graph has the same node and edge counts.
  kNodesAndEdges,
};

// Fraction of generated graphs that are novel w.r.t. `train`. Returns 0 for
// an empty generated set.
double novelty_ratio(const Dataset& gen, const Dataset& train,
                     NoveltyMode mode = NoveltyMode::kIsomorphism);

struct PatternReport {
  double tv = 0.0;
  CountDistribution train_hist;
  CountDistribution gen_hist;
};

struct EvalReport {
  std::map<std::string, PatternReport> per_pattern;
  double novelty = 0.0;
  std::size_t n_train = 0;
  std::size_t n_gen = 0;
  NoveltyMode novelty_mode = NoveltyMode::kIsomorphism;
};

// Histograms, TV per pattern and novelty. Throws InputError when either
// dataset is empty.
EvalReport evaluate(const Dataset& train, const Dataset& gen,
                    std::span<const Pattern> patterns,
                    NoveltyMode mode = NoveltyMode::kIsomorphism);

}  // namespace subdiff

#endif  // SUBDIFF_EVALUATOR_HPP_
