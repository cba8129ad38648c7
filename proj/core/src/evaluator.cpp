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

#include "subdiff/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

#include "subdiff/error.hpp"
#include "subdiff/isomorphism.hpp"
#include "subdiff/parallel.hpp"

namespace subdiff {
namespace {

void CheckNormalized(const CountDistribution& d, const char* which) {
  double sum = 0.0;
  for (const auto& [value, mass] : d.mass) {
    if (mass < 0.0) {
      throw ContractError(std::string(which) + " histogram has negative mass");
    }
    sum += mass;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ContractError(std::string(which) + " histogram sums to " +
                        std::to_string(sum) + ", not 1");
  }
}

bool HasFrequencies(const CountDistribution& d) {
  if (d.sample_size == 0 || d.frequency.size() != d.mass.size()) return false;
  std::uint64_t total = 0;
  for (const auto& [value, freq] : d.frequency) total += freq;
  return total == d.sample_size;
}

// sum |f_p N_q - f_q N_p| / (2 N_p N_q) in integers, then one division: the
// correctly rounded value of the exact rational.
double ExactTv(const CountDistribution& p, const CountDistribution& q) {
  __extension__ typedef unsigned __int128 Wide;
  const Wide np = p.sample_size;
  const Wide nq = q.sample_size;
  Wide num = 0;
  auto a = p.frequency.begin();
  auto b = q.frequency.begin();
  while (a != p.frequency.end() || b != q.frequency.end()) {
    if (b == q.frequency.end() ||
        (a != p.frequency.end() && a->first < b->first)) {
      num += a->second * nq;
      ++a;
    } else if (a == p.frequency.end() || b->first < a->first) {
      num += b->second * np;
      ++b;
    } else {
      const Wide x = a->second * nq;
      const Wide y = b->second * np;
      num += x > y ? x - y : y - x;
      ++a;
      ++b;
    }
  }
  return static_cast<double>(num) / static_cast<double>(2 * np * nq);
}

}  // namespace

double tv_distance(const CountDistribution& p, const CountDistribution& q) {
  CheckNormalized(p, "first");
  CheckNormalized(q, "second");
  if (HasFrequencies(p) && HasFrequencies(q)) return ExactTv(p, q);
  // Merge-walk the two sorted supports.
  double total = 0.0;
  auto a = p.mass.begin();
  auto b = q.mass.begin();
  while (a != p.mass.end() || b != q.mass.end()) {
    if (b == q.mass.end() || (a != p.mass.end() && a->first < b->first)) {
      total += a->second;
      ++a;
    } else if (a == p.mass.end() || b->first < a->first) {
      total += b->second;
      ++b;
    } else {
      total += std::abs(a->second - b->second);
      ++a;
      ++b;
    }
  }
  return std::clamp(0.5 * total, 0.0, 1.0);
}

double novelty_ratio(const Dataset& gen, const Dataset& train,
                     NoveltyMode mode) {
  if (gen.empty()) return 0.0;
  std::vector<char> novel(gen.size(), 0);
  if (mode == NoveltyMode::kIsomorphism) {
    std::vector<std::string> train_forms(train.size());
    parallel_for(train.size(), [&](std::size_t i) {
      train_forms[i] = canonical_form(train.graphs[i]);
    });
    const std::set<std::string> known(train_forms.begin(), train_forms.end());
    parallel_for(gen.size(), [&](std::size_t i) {
      novel[i] = known.count(canonical_form(gen.graphs[i])) == 0;
    });
  } else {
    std::set<std::pair<int, int>> known;
    for (const auto& g : train.graphs) {
      known.emplace(g.num_nodes(), g.num_edges());
    }
    for (std::size_t i = 0; i < gen.size(); ++i) {
      const auto& g = gen.graphs[i];
      novel[i] = known.count({g.num_nodes(), g.num_edges()}) == 0;
    }
  }
  const auto hits = std::count(novel.begin(), novel.end(), 1);
  return static_cast<double>(hits) / static_cast<double>(gen.size());
}

EvalReport evaluate(const Dataset& train, const Dataset& gen,
                    std::span<const Pattern> patterns, NoveltyMode mode) {
  if (train.empty()) throw InputError("training dataset is empty");
  if (gen.empty()) throw InputError("generated dataset is empty");
  EvalReport report;
  report.n_train = train.size();
  report.n_gen = gen.size();
  report.novelty_mode = mode;
  for (const auto& p : patterns) {
    PatternReport pr;
    pr.train_hist = count_distribution(train, p);
    pr.gen_hist = count_distribution(gen, p);
    pr.tv = tv_distance(pr.train_hist, pr.gen_hist);
    report.per_pattern[p.name] = std::move(pr);
  }
  report.novelty = novelty_ratio(gen, train, mode);
  return report;
}

}  // namespace subdiff
