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

#include "subdiff/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "subdiff/error.hpp"
#include "subdiff/parallel.hpp"
#include "subdiff/polynomial.hpp"

namespace subdiff {
namespace {

constexpr double kMinBeta = 1e-6;
constexpr std::size_t kChunk = 1024;
constexpr double kLog2Pi = 1.8378770664093454835606594728112;

int SlotIndex(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

std::vector<std::vector<int>> AllPermutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

double Factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Truncated exponential sum_{k<=K} x^k / k!.
double TruncatedExp(double x, int order) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= order; ++k) {
    term *= x / k;
    sum += term;
  }
  return sum;
}

}  // namespace

void NoiseSchedule::Validate() const {
  if (!(beta_min > 0.0 && beta_min < beta_max)) {
    throw InputError("noise schedule needs 0 < beta_min < beta_max");
  }
  if (!(t_min > 0.0 && t_min < t_max && t_max <= 1.0)) {
    throw InputError("noise schedule needs 0 < t_min < t_max <= 1");
  }
}

ScheduleValue schedule(const NoiseSchedule& sched, double t) {
  sched.Validate();
  if (!(t >= sched.t_min && t <= sched.t_max)) {
    throw InputError("time " + std::to_string(t) + " outside [" +
                     std::to_string(sched.t_min) + ", " +
                     std::to_string(sched.t_max) + "]");
  }
  const double log_alpha = -0.25 * t * t * (sched.beta_max - sched.beta_min) -
                           0.5 * t * sched.beta_min;
  // 1 - alpha^2 = -expm1(2 log alpha) keeps beta accurate for small t.
  return {std::exp(log_alpha), std::sqrt(-std::expm1(2.0 * log_alpha))};
}

void ScoreConfig::Validate() const {
  if (mc_samples < 1) throw InputError("Monte Carlo sample count must be >= 1");
  if (truncation < 0) throw InputError("series truncation must be >= 0");
  if (!(series_max_ratio > 0.0)) {
    throw InputError("series ratio limit must be positive");
  }
}

SymMatrix perturb(const Graph& a0, double t, const NoiseSchedule& sched,
                  Rng& rng) {
  const ScheduleValue s = schedule(sched, t);
  std::normal_distribution<double> normal;
  const int n = a0.num_nodes();
  SymMatrix w(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      w.set(u, v, s.alpha * (a0.has_edge(u, v) ? 1.0 : 0.0) +
                      s.beta * normal(rng));
    }
  }
  return w;
}

Graph quantize(const SymMatrix& w, double threshold) {
  std::vector<Edge> edges;
  for (int u = 0; u < w.dim(); ++u) {
    for (int v = u + 1; v < w.dim(); ++v) {
      if (w(u, v) > threshold) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(w.dim(), edges);
}

// --- PosteriorModel ----------------------------------------------------------

PosteriorModel::PosteriorModel(const Dataset& ds, int n, const ScoreConfig& cfg)
    : n_(n), cfg_(cfg) {
  cfg.Validate();
  if (n < 2 || n > kMaxNodes) {
    throw InputError("diffusion needs 2 <= n <= " + std::to_string(kMaxNodes));
  }
  // Identical adjacencies merge before symmetrization.
  std::map<std::vector<Edge>, double> distinct;
  std::size_t used = 0;
  for (const auto& g : ds.graphs) {
    if (g.num_nodes() != n) continue;
    distinct[g.edges()] += 1.0;
    ++used;
  }
  if (used == 0) {
    throw InputError("no training graph has " + std::to_string(n) +
                     " nodes (the score is conditioned on node count)");
  }
  PermPolicy policy = cfg.perm_policy;
  if (policy == PermPolicy::kAuto) {
    policy = n <= kMaxExhaustiveNodes ? PermPolicy::kExhaustive
                                      : PermPolicy::kMonteCarlo;
  }
  std::vector<std::vector<int>> perms;
  if (policy == PermPolicy::kExhaustive) {
    if (n > kMaxExhaustiveNodes) {
      throw ContractError("exhaustive symmetrization is limited to " +
                          std::to_string(kMaxExhaustiveNodes) + " nodes");
    }
    perms = AllPermutations(n);
  } else {
    Rng rng(cfg.seed);
    perms.reserve(static_cast<std::size_t>(cfg.mc_samples));
    for (int i = 0; i < cfg.mc_samples; ++i) {
      perms.push_back(random_permutation(n, rng));
    }
  }

  const int d = num_slots();
  const std::size_t words = (static_cast<std::size_t>(d) + 63) / 64;
  std::map<std::vector<std::uint64_t>, double> templates;
  const double unit = 1.0 / (static_cast<double>(used) *
                             static_cast<double>(perms.size()));
  for (const auto& [edges, multiplicity] : distinct) {
    for (const auto& perm : perms) {
      std::vector<std::uint64_t> key(words, 0);
      for (const auto& [u, v] : edges) {
        const int s = SlotIndex(n, perm[u], perm[v]);
        key[s / 64] |= std::uint64_t{1} << (s % 64);
      }
      templates[std::move(key)] += multiplicity * unit;
    }
  }
  offsets_.push_back(0);
  for (const auto& [key, weight] : templates) {
    for (int s = 0; s < d; ++s) {
      if ((key[s / 64] >> (s % 64)) & 1u) {
        slots_.push_back(static_cast<std::uint16_t>(s));
      }
    }
    offsets_.push_back(static_cast<std::uint32_t>(slots_.size()));
    weights_.push_back(weight);
    log_weights_.push_back(std::log(weight));
  }
}

std::span<const std::uint16_t> PosteriorModel::template_slots(
    std::size_t i) const {
  return std::span<const std::uint16_t>(slots_).subspan(
      offsets_[i], offsets_[i + 1] - offsets_[i]);
}

void PosteriorModel::CheckDim(const SymMatrix& w) const {
  if (w.dim() != n_) {
    throw InputError("matrix has " + std::to_string(w.dim()) +
                     " nodes but the model was built for " +
                     std::to_string(n_));
  }
}

// Log-sum-exp state over a block of templates; `mean` holds
// sum exp(logit - max) * T before normalisation.
struct PosteriorModel::Accumulator {
  double max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  std::vector<double> mean;

  void Merge(const Accumulator& o) {
    if (o.sum == 0.0) return;
    if (sum == 0.0) {
      *this = o;
      return;
    }
    const double m = std::max(max, o.max);
    const double a = std::exp(max - m);
    const double b = std::exp(o.max - m);
    sum = sum * a + o.sum * b;
    for (std::size_t s = 0; s < mean.size(); ++s) {
      mean[s] = mean[s] * a + o.mean[s] * b;
    }
    max = m;
  }
};

PosteriorModel::Accumulator PosteriorModel::Accumulate(
    std::span<const double> w, ScheduleValue s, bool want_mean) const {
  const double beta2 = s.beta * s.beta;
  const double lin = s.alpha / beta2;
  const double quad = 0.5 * s.alpha * s.alpha / beta2;
  const std::size_t count = num_templates();
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  std::vector<Accumulator> parts(chunks);
  std::vector<double> logits(count);
  auto run_chunk = [&](std::size_t c) {
    const std::size_t lo = c * kChunk;
    const std::size_t hi = std::min(count, lo + kChunk);
    Accumulator& acc = parts[c];
    for (std::size_t i = lo; i < hi; ++i) {
      double dot = 0.0;
      for (std::uint16_t slot : template_slots(i)) dot += w[slot];
      const double size = static_cast<double>(offsets_[i + 1] - offsets_[i]);
      logits[i] = log_weights_[i] + lin * dot - quad * size;
      acc.max = std::max(acc.max, logits[i]);
    }
    if (want_mean) acc.mean.assign(static_cast<std::size_t>(num_slots()), 0.0);
    for (std::size_t i = lo; i < hi; ++i) {
      const double e = std::exp(logits[i] - acc.max);
      acc.sum += e;
      if (want_mean) {
        for (std::uint16_t slot : template_slots(i)) acc.mean[slot] += e;
      }
    }
  };
  if (count >= 4 * kChunk) {
    parallel_for(chunks, run_chunk);
  } else {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  }
  Accumulator total;
  for (const auto& part : parts) total.Merge(part);
  return total;
}

double PosteriorModel::log_density(const SymMatrix& w, ScheduleValue s) const {
  CheckDim(w);
  if (s.beta < kMinBeta) {
    throw NumericalError("noise level beta_t below 1e-6");
  }
  const std::vector<double> upper = w.upper();
  const Accumulator acc = Accumulate(upper, s, /*want_mean=*/false);
  const double beta2 = s.beta * s.beta;
  double norm2 = 0.0;
  for (double x : upper) norm2 += x * x;
  return acc.max + std::log(acc.sum) - 0.5 * norm2 / beta2 -
         0.5 * num_slots() * (kLog2Pi + std::log(beta2));
}

void PosteriorModel::score_direct_upper(std::span<const double> w,
                                        ScheduleValue s,
                                        std::span<double> out) const {
  if (s.beta < kMinBeta) {
    throw NumericalError("noise level beta_t below 1e-6; score is singular");
  }
  const Accumulator acc = Accumulate(w, s, /*want_mean=*/true);
  const double beta2 = s.beta * s.beta;
  const double lin = s.alpha / beta2;
  for (std::size_t slot = 0; slot < w.size(); ++slot) {
    out[slot] = -w[slot] / beta2 + lin * (acc.mean[slot] / acc.sum);
  }
}

SymMatrix PosteriorModel::score_direct(const SymMatrix& w,
                                       ScheduleValue s) const {
  CheckDim(w);
  const std::vector<double> upper = w.upper();
  std::vector<double> out(upper.size());
  score_direct_upper(upper, s, out);
  return SymMatrix::FromUpper(n_, out);
}

double PosteriorModel::series_ratio(const SymMatrix& w, ScheduleValue s) const {
  CheckDim(w);
  const std::vector<double> upper = w.upper();
  double max_dot = 0.0;
  for (std::size_t i = 0; i < num_templates(); ++i) {
    double dot = 0.0;
    for (std::uint16_t slot : template_slots(i)) dot += upper[slot];
    max_dot = std::max(max_dot, std::abs(dot));
  }
  return s.alpha * max_dot / (s.beta * s.beta);
}

SeriesScore PosteriorModel::score_series(const SymMatrix& w,
                                         ScheduleValue s) const {
  return score_series(w, s, cfg_.truncation);
}

SeriesScore PosteriorModel::score_series(const SymMatrix& w, ScheduleValue s,
                                         int truncation) const {
  CheckDim(w);
  if (truncation < 0) throw InputError("series truncation must be >= 0");
  if (s.beta < kMinBeta) {
    throw NumericalError("noise level beta_t below 1e-6; score is singular");
  }
  const double ratio = series_ratio(w, s);
  if (ratio > cfg_.series_max_ratio) {
    throw SeriesDivergenceError(
        "series score outside its convergent regime: alpha*max|<T,W>|/beta^2 "
        "= " + std::to_string(ratio) + " exceeds limit " +
            std::to_string(cfg_.series_max_ratio),
        ratio);
  }
  const std::vector<double> upper = w.upper();
  const double beta2 = s.beta * s.beta;
  const double lin = s.alpha / beta2;
  const double quad = 0.5 * s.alpha * s.alpha / beta2;
  // Per-template Gaussian norm factor exp(-quad |T|), shifted by the
  // smallest template so it cannot underflow; the shift cancels in F / G.
  std::size_t min_size = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < num_templates(); ++i) {
    min_size = std::min<std::size_t>(min_size, offsets_[i + 1] - offsets_[i]);
  }
  double g = 0.0;
  std::vector<double> f(upper.size(), 0.0);
  for (std::size_t i = 0; i < num_templates(); ++i) {
    double dot = 0.0;
    for (std::uint16_t slot : template_slots(i)) dot += upper[slot];
    const double size = static_cast<double>(offsets_[i + 1] - offsets_[i]);
    const double weight =
        weights_[i] * std::exp(-quad * (size - static_cast<double>(min_size)));
    const double term = weight * TruncatedExp(lin * dot, truncation);
    g += term;
    for (std::uint16_t slot : template_slots(i)) f[slot] += term;
  }
  double total_weight = 0.0;
  for (double x : weights_) total_weight += x;
  if (!std::isfinite(g) || g <= 1e-300 * total_weight) {
    throw SeriesDivergenceError(
        "truncated series normaliser G is not positive (G = " +
            std::to_string(g) + ", ratio = " + std::to_string(ratio) + ")",
        ratio);
  }
  std::vector<double> out(upper.size());
  for (std::size_t slot = 0; slot < upper.size(); ++slot) {
    out[slot] = -upper[slot] / beta2 + lin * f[slot] / g;
  }
  return {SymMatrix::FromUpper(n_, out), ratio};
}

double log_density(const SymMatrix& w, double t, const Dataset& ds,
                   const ScoreConfig& cfg, const NoiseSchedule& sched) {
  const ScheduleValue s = schedule(sched, t);
  return PosteriorModel(ds, w.dim(), cfg).log_density(w, s);
}

SymMatrix exact_score_direct(const SymMatrix& w, double t, const Dataset& ds,
                             const ScoreConfig& cfg,
                             const NoiseSchedule& sched) {
  const ScheduleValue s = schedule(sched, t);
  return PosteriorModel(ds, w.dim(), cfg).score_direct(w, s);
}

SeriesScore exact_score_series(const SymMatrix& w, double t, const Dataset& ds,
                               const ScoreConfig& cfg,
                               const NoiseSchedule& sched) {
  const ScheduleValue s = schedule(sched, t);
  return PosteriorModel(ds, w.dim(), cfg).score_series(w, s);
}

// --- basis expansion check ---------------------------------------------------

namespace {

// Calls fn(a) for every a in [n]^{len}.
template <typename Fn>
void ForEachTuple(int n, int len, Fn&& fn) {
  std::vector<int> a(static_cast<std::size_t>(len), 0);
  for (;;) {
    fn(a);
    int pos = len - 1;
    while (pos >= 0 && ++a[pos] == n) a[pos--] = 0;
    if (pos < 0) return;
  }
}

}  // namespace

BasisReport verify_basis_expansion(const SymMatrix& w, int k,
                                   const Dataset& ds, const ScoreConfig& cfg) {
  const int n = w.dim();
  if (n > kMaxBasisCheckNodes || k > kMaxBasisCheckOrder || k < 0) {
    throw CapacityError("basis expansion check supports n <= " +
                        std::to_string(kMaxBasisCheckNodes) + ", 0 <= k <= " +
                        std::to_string(kMaxBasisCheckOrder));
  }
  if (cfg.perm_policy == PermPolicy::kMonteCarlo) {
    throw ContractError("basis expansion check needs exhaustive permutations");
  }
  std::vector<Graph> graphs;
  for (const auto& g : ds.graphs) {
    if (g.num_nodes() == n) graphs.push_back(g);
  }
  if (graphs.empty()) {
    throw InputError("no training graph has " + std::to_string(n) + " nodes");
  }
  const double n_fact = Factorial(n);
  const double samples = static_cast<double>(graphs.size()) * n_fact;

  BasisReport report;
  report.k = k;
  report.f_moment = SquareMatrix(n);
  report.f_basis = SquareMatrix(n);

  // (a) Moment form over every (graph, permutation) pair.
  for (const auto& g : graphs) {
    for (const auto& perm : AllPermutations(n)) {
      const SymMatrix p = SymMatrix::FromGraph(g.Permuted(perm));
      double dot = 0.0;
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) dot += p(x, y) * w(x, y);
      }
      const double power = std::pow(dot, k);
      report.g_moment += power / samples;
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          report.f_moment(x, y) += p(x, y) * power / samples;
        }
      }
    }
  }

  // (b) Basis expansion.
  std::vector<SymMatrix> adjacency;
  for (const auto& g : graphs) adjacency.push_back(SymMatrix::FromGraph(g));
  auto expected_label_form = [&](const MonomialGraph& mg) {
    // E over training graphs of (n - |S|)! Q_S(A0).
    const double completion = Factorial(n - mg.pattern.num_nodes());
    const Monomial simple = Monomial::FromPattern(mg.pattern);
    double sum = 0.0;
    for (const auto& a0 : adjacency) sum += invariant_basis(a0, simple);
    return completion * sum / static_cast<double>(adjacency.size());
  };

  ForEachTuple(n, 2 * k, [&](const std::vector<int>& a) {
    // G: sum over a of E[Q(A0, S_a)] Q(W, S_a).
    {
      const MonomialGraph s = monomial_graph(IndexTuple{a, std::nullopt});
      if (!s.vanishing) {
        const double coef = expected_label_form(s);
        if (coef != 0.0) {
          const double completion = Factorial(n - s.monomial.num_nodes);
          report.g_basis += coef * completion * invariant_basis(w, s.monomial);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        ++report.terms;
        const IndexTuple t{a, Edge{i, j}};
        const MonomialGraph s = monomial_graph(t, RootEdge::kInclude);
        if (s.vanishing) {
          ++report.vanishing_terms;
          continue;
        }
        const double coef = expected_label_form(s);
        if (coef == 0.0) continue;
        const MonomialGraph tg = monomial_graph(t, RootEdge::kOmit);
        SquareMatrix term = equivariant_basis(w, tg.monomial);
        term *= coef * Factorial(n - tg.monomial.num_nodes);
        report.f_basis += term;
      }
    }
  });

  report.f_discrepancy = (report.f_moment - report.f_basis).max_abs();
  report.g_discrepancy = std::abs(report.g_moment - report.g_basis);
  report.max_discrepancy = std::max(report.f_discrepancy, report.g_discrepancy);
  return report;
}

// --- sampler -----------------------------------------------------------------

Graph reverse_sample(const PosteriorModel& model, const NoiseSchedule& sched,
                     const SampleOptions& opts, Rng& rng) {
  sched.Validate();
  if (opts.steps < 10) throw InputError("sampler needs at least 10 steps");
  const int n = model.dim();
  const std::size_t d = static_cast<std::size_t>(model.num_slots());
  std::normal_distribution<double> normal;
  std::vector<double> w(d);
  for (double& x : w) x = normal(rng);
  std::vector<double> score(d);
  const double dt = (sched.t_max - sched.t_min) / opts.steps;
  for (int step = 0; step < opts.steps; ++step) {
    const double t = sched.t_max - step * dt;
    const ScheduleValue s = schedule(sched, std::max(t, sched.t_min));
    if (opts.mode == ScoreMode::kDirect) {
      model.score_direct_upper(w, s, score);
    } else {
      const SeriesScore series =
          model.score_series(SymMatrix::FromUpper(n, w), s);
      const std::vector<double> up = series.score.upper();
      std::copy(up.begin(), up.end(), score.begin());
    }
    const double rate = sched.rate(t);
    const double diffusion = std::sqrt(rate * dt);
    for (std::size_t i = 0; i < d; ++i) {
      w[i] += dt * (0.5 * rate * w[i] + rate * score[i]) +
              diffusion * normal(rng);
    }
    if (opts.on_step) opts.on_step(t - dt, SymMatrix::FromUpper(n, w));
  }
  return quantize(SymMatrix::FromUpper(n, w), opts.threshold);
}

std::vector<Graph> reverse_sample_many(const PosteriorModel& model,
                                       const NoiseSchedule& sched,
                                       const SampleOptions& opts,
                                       std::size_t count, std::uint64_t seed) {
  std::vector<Graph> out(count);
  parallel_for(count, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    out[i] = reverse_sample(model, sched, opts, rng);
  });
  return out;
}

}  // namespace subdiff
