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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "cli.hpp"
#include "subdiff/count.hpp"
#include "subdiff/diffusion.hpp"
#include "subdiff/error.hpp"
#include "subdiff/io.hpp"
#include "subdiff/isomorphism.hpp"
#include "subdiff/patterns.hpp"
#include "subdiff/polynomial.hpp"
#include "subdiff/random.hpp"

namespace subdiff::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr double kFiniteDiffStep = 1e-5;

Graph RandomGraph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(n, edges);
}

SymMatrix RandomMatrix(int n, Rng& rng) {
  std::normal_distribution<double> normal;
  SymMatrix w(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) w.set(u, v, normal(rng));
  }
  return w;
}

std::vector<std::vector<int>> AllPermutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

ScoreConfig ExhaustiveConfig(int truncation) {
  ScoreConfig cfg;
  cfg.perm_policy = PermPolicy::kExhaustive;
  cfg.truncation = truncation;
  return cfg;
}

// Training graphs of size n: the first `size` graphs of --train with n
// nodes, or random graphs.
Dataset TrainingSet(const VerifyOptions& opts, int n, int size, Rng& rng) {
  Dataset ds;
  if (opts.train) {
    for (auto& g : read_dataset(*opts.train).graphs) {
      if (g.num_nodes() == n && static_cast<int>(ds.size()) < size) {
        ds.graphs.push_back(std::move(g));
      }
    }
    if (ds.empty()) {
      throw InputError("--train has no graph with " + std::to_string(n) +
                       " nodes");
    }
    return ds;
  }
  for (int i = 0; i < size; ++i) {
    ds.graphs.push_back(RandomGraph(n, opts.edge_prob, rng));
  }
  return ds;
}

Check MakeCheck(std::string name, double value, double tolerance) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.tolerance = tolerance;
  c.pass = std::isfinite(value) && value <= tolerance;
  return c;
}

double Tol(const VerifyOptions& opts, double fallback) {
  return opts.tolerance.value_or(fallback);
}

void RequireRange(const char* what, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw InputError(std::string(what) + " must be in [" + std::to_string(lo) +
                     ", " + std::to_string(hi) + "], got " +
                     std::to_string(value));
  }
}

VerifyReport Eq5(const VerifyOptions& opts) {
  const int n = opts.n > 0 ? opts.n : 6;
  const int trials = opts.trials > 0 ? opts.trials : 200;
  RequireRange("--n", n, 1, 12);
  std::vector<Pattern> patterns;
  for (const auto& p : pattern_library()) {
    if (p.num_nodes() <= kMaxBasisPatternNodes) patterns.push_back(p);
  }
  Rng rng(opts.seed);
  std::uniform_int_distribution<int> size(1, n);
  std::uint64_t comparisons = 0;
  std::uint64_t failures = 0;
  Json first_failure = nullptr;
  for (int trial = 0; trial < trials; ++trial) {
    const Graph g = RandomGraph(size(rng), opts.edge_prob, rng);
    for (const auto& p : patterns) {
      const Count lhs = injective_sum_exact(g, Monomial::FromPattern(p));
      const Count rhs = Count{automorphism_count(p.graph)} * count_subgraphs(g, p);
      ++comparisons;
      if (lhs != rhs) {
        ++failures;
        if (first_failure.is_null()) {
          first_failure = {{"trial", trial},
                           {"pattern", p.name},
                           {"scaled_polynomial", to_string(lhs)},
                           {"aut_times_count", to_string(rhs)}};
        }
      }
    }
  }
  VerifyReport r;
  r.config = {{"n_max", n}, {"trials", trials}, {"edge_prob", opts.edge_prob}};
  Check c = MakeCheck("scaled_polynomial_equals_aut_times_count",
                      static_cast<double>(failures), 0.0);
  c.detail = {{"comparisons", comparisons}, {"failures", failures}};
  if (!first_failure.is_null()) c.detail["first_failure"] = first_failure;
  r.checks.push_back(std::move(c));
  return r;
}

VerifyReport FiniteDiff(const VerifyOptions& opts) {
  const int n = opts.n > 0 ? opts.n : 4;
  RequireRange("--n", n, 2, kMaxExhaustiveNodes);
  const double tol = Tol(opts, 1e-4);
  const NoiseSchedule sched;
  Rng rng(opts.seed);
  VerifyReport r;
  r.config = {{"n", n},
              {"dataset_sizes", {1, 2, 3}},
              {"times", {0.2, 0.5, 0.9}},
              {"step", kFiniteDiffStep},
              {"edge_prob", opts.edge_prob}};
  for (int size = 1; size <= 3; ++size) {
    const Dataset ds = TrainingSet(opts, n, size, rng);
    const PosteriorModel model(ds, n, ExhaustiveConfig(opts.truncation));
    for (double t : {0.2, 0.5, 0.9}) {
      const ScheduleValue s = schedule(sched, t);
      const SymMatrix w = perturb(ds.graphs[0], t, sched, rng);
      const SymMatrix score = model.score_direct(w, s);
      double worst = 0.0;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          SymMatrix plus = w;
          SymMatrix minus = w;
          plus.add(u, v, kFiniteDiffStep);
          minus.add(u, v, -kFiniteDiffStep);
          const double fd =
              (model.log_density(plus, s) - model.log_density(minus, s)) /
              (2 * kFiniteDiffStep);
          const double denom = std::max(std::abs(score(u, v)), 1e-12);
          worst = std::max(worst, std::abs(fd - score(u, v)) / denom);
        }
      }
      Check c = MakeCheck("score_matches_log_density_gradient", worst, tol);
      c.detail = {{"dataset_size", ds.size()},
                  {"t", t},
                  {"templates", model.num_templates()}};
      r.checks.push_back(std::move(c));
    }
  }
  return r;
}

VerifyReport Series(const VerifyOptions& opts) {
  const int n = opts.n > 0 ? opts.n : 4;
  const int trials = opts.trials > 0 ? opts.trials : 10;
  RequireRange("--n", n, 2, kMaxExhaustiveNodes);
  const double tol = Tol(opts, 1e-3);
  const NoiseSchedule sched;
  Rng rng(opts.seed);
  const Dataset ds = TrainingSet(opts, n, 2, rng);
  const PosteriorModel model(ds, n, ExhaustiveConfig(opts.truncation));
  const ScheduleValue s = schedule(sched, opts.t);
  double max_ratio = 0.0;
  double max_error = 0.0;
  int monotone_violations = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const SymMatrix w =
        perturb(ds.graphs[static_cast<std::size_t>(trial) % ds.size()], opts.t,
                sched, rng);
    max_ratio = std::max(max_ratio, model.series_ratio(w, s));
    const SymMatrix direct = model.score_direct(w, s);
    max_error = std::max(
        max_error,
        relative_frobenius_error(model.score_series(w, s).score, direct));
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= opts.truncation; k += 2) {
      const double err =
          relative_frobenius_error(model.score_series(w, s, k).score, direct);
      if (err > prev + 1e-12) ++monotone_violations;
      prev = err;
    }
  }
  VerifyReport r;
  r.config = {{"n", n},
              {"trials", trials},
              {"dataset_size", ds.size()},
              {"t", opts.t},
              {"truncation", opts.truncation},
              {"edge_prob", opts.edge_prob}};
  r.checks.push_back(MakeCheck("convergent_regime_ratio", max_ratio, 1.0));
  Check err = MakeCheck("series_vs_direct_relative_frobenius", max_error, tol);
  err.detail = {{"alpha", s.alpha}, {"beta", s.beta}};
  r.checks.push_back(std::move(err));
  r.checks.push_back(MakeCheck("error_nonincreasing_in_truncation",
                               monotone_violations, 0.0));
  return r;
}

VerifyReport Basis(const VerifyOptions& opts) {
  const int n = opts.n > 0 ? opts.n : 4;
  const int trials = opts.trials > 0 ? opts.trials : 3;
  RequireRange("--n", n, 2, kMaxBasisCheckNodes);
  RequireRange("--k", opts.k, 0, kMaxBasisCheckOrder);
  const double tol = Tol(opts, 1e-9);
  Rng rng(opts.seed);
  const Dataset ds = TrainingSet(opts, n, 2, rng);
  VerifyReport r;
  r.config = {{"n", n},
              {"k", opts.k},
              {"trials", trials},
              {"dataset_size", ds.size()},
              {"edge_prob", opts.edge_prob}};
  for (int trial = 0; trial < trials; ++trial) {
    const SymMatrix w = RandomMatrix(n, rng);
    const BasisReport b =
        verify_basis_expansion(w, opts.k, ds, ExhaustiveConfig(opts.truncation));
    Check c = MakeCheck("basis_expansion_discrepancy", b.max_discrepancy, tol);
    c.detail = {{"f_discrepancy", b.f_discrepancy},
                {"g_discrepancy", b.g_discrepancy},
                {"g_moment", b.g_moment},
                {"f_moment_max_abs", b.f_moment.max_abs()},
                {"terms", b.terms},
                {"vanishing_terms", b.vanishing_terms}};
    r.checks.push_back(std::move(c));
  }
  return r;
}

VerifyReport Equivariance(const VerifyOptions& opts) {
  const int n = opts.n > 0 ? opts.n : 5;
  const int trials = opts.trials > 0 ? opts.trials : 3;
  RequireRange("--n", n, 2, 6);
  const double tol = Tol(opts, 1e-12);
  std::vector<Pattern> patterns;
  for (const auto& p : pattern_library()) {
    if (p.num_nodes() <= std::min(n, kMaxBasisPatternNodes)) {
      patterns.push_back(p);
    }
  }
  const std::vector<Pattern> marked = derive_marked_patterns(patterns);
  const auto perms = AllPermutations(n);
  Rng rng(opts.seed);
  double inv = 0.0;
  double equi = 0.0;
  double score_dev = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const SymMatrix w = RandomMatrix(n, rng);
    std::vector<SymMatrix> permuted;
    permuted.reserve(perms.size());
    for (const auto& perm : perms) permuted.push_back(w.Permuted(perm));
    for (const auto& p : patterns) {
      const double base = invariant_basis(w, p);
      const double scale = std::max(std::abs(base), 1e-300);
      for (const auto& pw : permuted) {
        inv = std::max(inv, std::abs(invariant_basis(pw, p) - base) / scale);
      }
    }
    for (const auto& p : marked) {
      const SquareMatrix base = equivariant_basis(w, p);
      const double scale = std::max(base.max_abs(), 1e-300);
      for (std::size_t i = 0; i < perms.size(); ++i) {
        const SquareMatrix diff =
            equivariant_basis(permuted[i], p) - base.Permuted(perms[i]);
        equi = std::max(equi, diff.max_abs() / scale);
      }
    }
    const Dataset ds = TrainingSet(opts, n, 2, rng);
    const PosteriorModel model(ds, n, ExhaustiveConfig(opts.truncation));
    const ScheduleValue s = schedule(NoiseSchedule{}, 0.5);
    const SymMatrix score = model.score_direct(w, s);
    const double scale = std::max(score.max_abs(), 1e-300);
    for (std::size_t i = 0; i < perms.size(); ++i) {
      score_dev = std::max(
          score_dev, max_abs_diff(model.score_direct(permuted[i], s),
                                  score.Permuted(perms[i])) /
                         scale);
    }
  }
  VerifyReport r;
  r.config = {{"n", n},
              {"trials", trials},
              {"permutations", perms.size()},
              {"invariant_patterns", patterns.size()},
              {"marked_patterns", marked.size()},
              {"edge_prob", opts.edge_prob}};
  r.checks.push_back(MakeCheck("invariant_basis_invariance", inv, tol));
  r.checks.push_back(MakeCheck("equivariant_basis_equivariance", equi, tol));
  r.checks.push_back(
      MakeCheck("direct_score_equivariance", score_dev, Tol(opts, 1e-10)));
  return r;
}

}  // namespace

bool VerifyReport::pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

Json VerifyReport::ToJson() const {
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"name", c.name},
                           {"value", c.value},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass},
                           {"detail", c.detail}});
  }
  return {{"suite", suite},
          {"suite_config", config},
          {"checks", checks_json},
          {"pass", pass()}};
}

VerifyReport RunVerify(const VerifyOptions& opts) {
  VerifyReport r;
  if (opts.suite == "eq5") {
    r = Eq5(opts);
  } else if (opts.suite == "finitediff") {
    r = FiniteDiff(opts);
  } else if (opts.suite == "series") {
    r = Series(opts);
  } else if (opts.suite == "basis") {
    r = Basis(opts);
  } else if (opts.suite == "equivariance") {
    r = Equivariance(opts);
  } else {
    std::string valid;
    for (const auto& s : VerifySuites()) valid += (valid.empty() ? "" : ", ") + s;
    throw InputError("unknown suite '" + opts.suite + "'; valid suites: " +
                     valid);
  }
  r.suite = opts.suite;
  return r;
}

}  // namespace subdiff::cli
