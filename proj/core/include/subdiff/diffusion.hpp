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

#ifndef SUBDIFF_DIFFUSION_HPP_
#define SUBDIFF_DIFFUSION_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "subdiff/graph.hpp"
#include "subdiff/random.hpp"
#include "subdiff/sym_matrix.hpp"

namespace subdiff {

// Variance-preserving schedule with a linear rate
//   rate(t) = beta_min + t (beta_max - beta_min),
//   alpha_t = exp(-1/4 t^2 (beta_max - beta_min) - 1/2 t beta_min),
//   beta_t  = sqrt(1 - alpha_t^2).
struct NoiseSchedule {
  double beta_min = 0.1;
  double beta_max = 20.0;
  double t_min = 1e-3;
  double t_max = 1.0;

  // Throws InputError unless 0 < beta_min < beta_max and
  // 0 < t_min < t_max <= 1.
  void Validate() const;
  double rate(double t) const { return beta_min + t * (beta_max - beta_min); }
};

// Signal scale and noise standard deviation at one time.
struct ScheduleValue {
  double alpha;
  double beta;
};

// Throws InputError when t is outside [t_min, t_max].
ScheduleValue schedule(const NoiseSchedule& sched, double t);

enum class PermPolicy {
  // Exhaustive for n <= 8, Monte Carlo otherwise.
  kAuto,
  kExhaustive,
  kMonteCarlo,
};

inline constexpr int kMaxExhaustiveNodes = 8;

struct ScoreConfig {
  PermPolicy perm_policy = PermPolicy::kAuto;
  // Monte Carlo permutation count and seed. The same permutations are
  // applied to every training graph.
  int mc_samples = 10000;
  std::uint64_t seed = 0;
  // Taylor truncation order of the series score.
  int truncation = 12;
  // The series score refuses to run when alpha * max|<T, W>| / beta^2
  // exceeds this.
  double series_max_ratio = 4.0;

  void Validate() const;
};

// Gaussian perturbation W = alpha_t A0 + beta_t Z with i.i.d. standard
// normal Z on the strict upper triangle (mirrored), zero diagonal.
SymMatrix perturb(const Graph& a0, double t, const NoiseSchedule& sched,
                  Rng& rng);

// Edge present iff entry > threshold.
Graph quantize(const SymMatrix& w, double threshold = 0.5);

struct SeriesScore {
  SymMatrix score;
  // alpha * max over templates of |<T, W>| / beta^2.
  double ratio = 0.0;
};

// The noisy-graph density p_t of the permutation-symmetrized training set:
// a uniform mixture over (training graph, permutation) pairs of isotropic
// Gaussians with mean alpha_t * pi(A0) and per-slot variance beta_t^2 on the
// n(n-1)/2 upper-triangle slots.
//
// Permuted adjacencies are deduplicated into weighted templates, so the
// evaluation cost is the orbit size, not |ds| * n!. Only graphs with exactly
// `n` nodes are used. Reductions run over fixed-size chunks combined in
// order, so every result is independent of the thread count.
class PosteriorModel {
 public:
  // Throws InputError if no graph in ds has n nodes, ContractError for
  // exhaustive symmetrization above 8 nodes.
  PosteriorModel(const Dataset& ds, int n, const ScoreConfig& cfg);

  int dim() const { return n_; }
  int num_slots() const { return n_ * (n_ - 1) / 2; }
  std::size_t num_templates() const { return offsets_.size() - 1; }
  std::span<const std::uint16_t> template_slots(std::size_t i) const;
  double template_weight(std::size_t i) const { return weights_[i]; }
  const ScoreConfig& config() const { return cfg_; }

  // Exact log density (natural log) in upper-triangle coordinates. The
  // additive constant -D/2 log(2 pi beta^2) is included, so the value is a
  // true log density over R^D, D = n(n-1)/2.
  double log_density(const SymMatrix& w, ScheduleValue s) const;

  // -W / beta^2 + (alpha / beta^2) * posterior mean of pi(A0). Throws
  // NumericalError when beta < 1e-6.
  SymMatrix score_direct(const SymMatrix& w, ScheduleValue s) const;

  // Taylor-truncated score: exp(alpha <T, W> / beta^2) in the posterior
  // weights is replaced by its order-K expansion. Throws
  // SeriesDivergenceError when the ratio exceeds cfg.series_max_ratio or the
  // truncated normaliser is not positive.
  SeriesScore score_series(const SymMatrix& w, ScheduleValue s) const;
  SeriesScore score_series(const SymMatrix& w, ScheduleValue s,
                           int truncation) const;

  // alpha * max|<T, W>| / beta^2.
  double series_ratio(const SymMatrix& w, ScheduleValue s) const;

  // Raw-array form used by the sampler: `w` and `out` are upper triangles.
  void score_direct_upper(std::span<const double> w, ScheduleValue s,
                          std::span<double> out) const;

 private:
  struct Accumulator;
  Accumulator Accumulate(std::span<const double> w, ScheduleValue s,
                         bool want_mean) const;
  void CheckDim(const SymMatrix& w) const;

  int n_;
  ScoreConfig cfg_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint16_t> slots_;
  std::vector<double> weights_;
  std::vector<double> log_weights_;
};

// Convenience forms that build a PosteriorModel for W.dim() on each call.
double log_density(const SymMatrix& w, double t, const Dataset& ds,
                   const ScoreConfig& cfg, const NoiseSchedule& sched);
SymMatrix exact_score_direct(const SymMatrix& w, double t, const Dataset& ds,
                             const ScoreConfig& cfg,
                             const NoiseSchedule& sched);
SeriesScore exact_score_series(const SymMatrix& w, double t, const Dataset& ds,
                               const ScoreConfig& cfg,
                               const NoiseSchedule& sched);

// Two evaluations of the order-k Taylor coefficients, using the full-matrix
// inner product <A, W> = sum_{x,y} A_xy W_xy and the permutation-symmetrized
// training distribution:
//   F_k(W) = E[pi(A0) <pi(A0), W>^k],  G_k(W) = E[<pi(A0), W>^k]
// once as moments and once as the basis expansion
//   F_k = sum_{ij} sum_{a in [n]^{2k}} E[Q(A0, S_ija)] Qt(W, T_ija),
//   G_k = sum_{a in [n]^{2k}} E[Q(A0, S_a)] Q(W, S_a),
// where Q(A, S) = (n - |S|)! Q_S(A) is the label-set form of the invariant
// basis and Qt likewise for the equivariant one.
struct BasisReport {
  int k = 0;
  SquareMatrix f_moment;
  SquareMatrix f_basis;
  double g_moment = 0.0;
  double g_basis = 0.0;
  double f_discrepancy = 0.0;
  double g_discrepancy = 0.0;
  double max_discrepancy = 0.0;
  // Number of (ij, a) terms evaluated and skipped as vanishing.
  std::size_t terms = 0;
  std::size_t vanishing_terms = 0;
};

inline constexpr int kMaxBasisCheckNodes = 4;
inline constexpr int kMaxBasisCheckOrder = 3;

// Throws CapacityError for n > 4 or k > 3, ContractError for a Monte Carlo
// permutation policy (the basis side is intrinsically exhaustive).
BasisReport verify_basis_expansion(const SymMatrix& w, int k,
                                   const Dataset& ds, const ScoreConfig& cfg);

enum class ScoreMode { kDirect, kSeries };

struct SampleOptions {
  int steps = 500;
  ScoreMode mode = ScoreMode::kDirect;
  double threshold = 0.5;
  // Called after every Euler-Maruyama step with (t, W).
  std::function<void(double, const SymMatrix&)> on_step;
};

// Reverse-time VP-SDE
//   dW = [-1/2 rate(t) W - rate(t) score(W, t)] dt + sqrt(rate(t)) dB
// integrated with Euler-Maruyama on a uniform grid from t_max down to t_min,
// starting from a standard normal upper triangle, then quantized.
// Throws InputError for steps < 10.
Graph reverse_sample(const PosteriorModel& model, const NoiseSchedule& sched,
                     const SampleOptions& opts, Rng& rng);

// `count` independent samples; sample i uses Rng(derive_seed(seed, i)).
std::vector<Graph> reverse_sample_many(const PosteriorModel& model,
                                       const NoiseSchedule& sched,
                                       const SampleOptions& opts,
                                       std::size_t count, std::uint64_t seed);

}  // namespace subdiff

#endif  // SUBDIFF_DIFFUSION_HPP_
