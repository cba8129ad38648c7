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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "subdiff/count.hpp"
#include "subdiff/datagen.hpp"
#include "subdiff/diffusion.hpp"
#include "subdiff/error.hpp"
#include "subdiff/evaluator.hpp"
#include "subdiff/io.hpp"
#include "subdiff/parallel.hpp"
#include "subdiff/patterns.hpp"
#include "subdiff/random.hpp"

namespace subdiff::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

struct CommonOptions {
  int threads = 0;
  std::string pattern_file;
};

struct CountOptions {
  std::string in;
  std::vector<std::string> patterns;
};

struct GenOptions {
  std::string pattern;
  int n = 0;
  int count = 0;
  std::string decoration = "tree";
  std::uint64_t seed = 0;
  int max_retries = 1000;
  std::string out;
};

struct SampleCliOptions {
  std::string train;
  std::string out;
  int n = 0;
  int num_samples = 100;
  std::uint64_t seed = 0;
  int steps = 500;
  std::string mode = "direct";
  double threshold = 0.5;
  NoiseSchedule sched;
  std::string perm_policy = "auto";
  int mc_samples = 10000;
  std::uint64_t perm_seed = 0;
  int truncation = 12;
  double series_max_ratio = 4.0;
  std::string trajectory;
};

struct EvalOptions {
  std::string train;
  std::string gen;
  std::vector<std::string> patterns;
  std::string novelty = "isomorphism";
};

// Histogram keys are decimal count values, as in the dataset-level JSON.
Json MassJson(const CountDistribution& d) {
  Json j = Json::object();
  for (const auto& [value, mass] : d.mass) j[std::to_string(value)] = mass;
  return j;
}

Json FrequencyJson(const CountDistribution& d) {
  Json j = Json::object();
  for (const auto& [value, freq] : d.frequency) j[std::to_string(value)] = freq;
  return j;
}

Json ScheduleJson(const NoiseSchedule& s) {
  return {{"beta_min", s.beta_min},
          {"beta_max", s.beta_max},
          {"t_min", s.t_min},
          {"t_max", s.t_max}};
}

std::vector<Pattern> ExtraPatterns(const CommonOptions& common) {
  if (common.pattern_file.empty()) return {};
  return read_pattern_file(common.pattern_file);
}

std::vector<Pattern> ResolvePatterns(std::vector<std::string> names,
                                     const CommonOptions& common) {
  std::erase(names, std::string());
  if (names.empty()) throw InputError("pattern list is empty");
  const auto extra = ExtraPatterns(common);
  return resolve_patterns(names, extra);
}

Json BaseConfig(const char* command, const CommonOptions& common) {
  Json c = {{"command", command}, {"version", kVersion}};
  if (!common.pattern_file.empty()) c["pattern_file"] = common.pattern_file;
  return c;
}

void Emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int CmdCount(const CountOptions& o, const CommonOptions& common,
             std::ostream& out, std::ostream& err) {
  const auto patterns = ResolvePatterns(o.patterns, common);
  const Dataset ds = read_dataset(o.in);
  if (ds.empty()) throw InputError(o.in + ": dataset is empty");
  Json config = BaseConfig("count", common);
  config["in"] = o.in;
  config["patterns"] = o.patterns;

  Json distributions = Json::object();
  Json details = Json::object();
  for (const auto& p : patterns) {
    const auto per_graph = count_per_graph(ds, p);
    std::map<std::uint64_t, std::uint64_t> freq;
    for (auto c : per_graph) ++freq[c];
    const auto dist = CountDistribution::FromFrequencies(std::move(freq));
    distributions[p.name] = MassJson(dist);
    details[p.name] = {{"pattern", p.name},
                       {"counts", FrequencyJson(dist)},
                       {"per_graph", per_graph}};
    err << p.name << ": " << dist.frequency.size()
        << " distinct count value(s) over " << ds.size() << " graph(s)\n";
  }
  Emit(out, {{"config", config},
             {"n_graphs", ds.size()},
             {"distributions", distributions},
             {"patterns", details}});
  return kExitOk;
}

Decoration ParseDecoration(const std::string& s) {
  if (s == "tree") return Decoration::kTree;
  if (s == "none") return Decoration::kNone;
  throw InputError("unknown decoration '" + s + "'; valid: none, tree");
}

int CmdGenData(const GenOptions& o, const CommonOptions& common,
               std::ostream& out, std::ostream& err) {
  const std::vector<std::string> names = {o.pattern};
  const Pattern p = ResolvePatterns(names, common).front();
  if (o.count < 1) throw InputError("--count must be >= 1");
  PlantOptions plant;
  plant.num_nodes = o.n;
  plant.count = o.count;
  plant.decoration = ParseDecoration(o.decoration);
  plant.seed = o.seed;
  plant.max_retries = o.max_retries;
  const Dataset ds = plant_pattern_dataset(p, plant);
  write_dataset(std::filesystem::path(o.out), ds);

  Json config = BaseConfig("gen-data", common);
  config.update({{"pattern", o.pattern},
                 {"n", o.n},
                 {"count", o.count},
                 {"decoration", o.decoration},
                 {"seed", o.seed},
                 {"max_retries", o.max_retries},
                 {"out", o.out}});
  Json meta = Json::object();
  for (const auto& [k, v] : ds.metadata) meta[k] = v;
  Emit(out, {{"config", config},
             {"graphs", ds.size()},
             {"metadata", meta}});
  err << "wrote " << ds.size() << " graph(s) to " << o.out << " ("
      << ds.metadata.at("draws") << " draws)\n";
  return kExitOk;
}

PermPolicy ParsePolicy(const std::string& s) {
  if (s == "auto") return PermPolicy::kAuto;
  if (s == "exhaustive") return PermPolicy::kExhaustive;
  if (s == "mc") return PermPolicy::kMonteCarlo;
  throw InputError("unknown permutation policy '" + s +
                   "'; valid: auto, exhaustive, mc");
}

ScoreMode ParseMode(const std::string& s) {
  if (s == "direct") return ScoreMode::kDirect;
  if (s == "series") return ScoreMode::kSeries;
  throw InputError("unknown score mode '" + s + "'; valid: direct, series");
}

Json MatrixJson(const SymMatrix& w) {
  Json rows = Json::array();
  for (int u = 0; u < w.dim(); ++u) {
    Json row = Json::array();
    for (int v = 0; v < w.dim(); ++v) row.push_back(w(u, v));
    rows.push_back(std::move(row));
  }
  return rows;
}

int CmdSample(const SampleCliOptions& o, const CommonOptions& common,
              std::ostream& out, std::ostream& err) {
  o.sched.Validate();
  const Dataset train = read_dataset(o.train);
  if (train.empty()) throw InputError(o.train + ": dataset is empty");
  if (o.num_samples < 1) throw InputError("--num-samples must be >= 1");
  const int n = o.n > 0 ? o.n : train.graphs.front().num_nodes();

  ScoreConfig cfg;
  cfg.perm_policy = ParsePolicy(o.perm_policy);
  cfg.mc_samples = o.mc_samples;
  cfg.seed = o.perm_seed;
  cfg.truncation = o.truncation;
  cfg.series_max_ratio = o.series_max_ratio;
  const PosteriorModel model(train, n, cfg);

  SampleOptions opts;
  opts.steps = o.steps;
  opts.mode = ParseMode(o.mode);
  opts.threshold = o.threshold;

  Json config = BaseConfig("sample", common);
  config.update({{"train", o.train},
                 {"out", o.out},
                 {"n", n},
                 {"num_samples", o.num_samples},
                 {"seed", o.seed},
                 {"steps", o.steps},
                 {"mode", o.mode},
                 {"threshold", o.threshold},
                 {"schedule", ScheduleJson(o.sched)},
                 {"perm_policy", o.perm_policy},
                 {"mc_samples", o.mc_samples},
                 {"perm_seed", o.perm_seed},
                 {"truncation", o.truncation},
                 {"series_max_ratio", o.series_max_ratio}});
  if (!o.trajectory.empty()) config["trajectory"] = o.trajectory;

  const auto count = static_cast<std::size_t>(o.num_samples);
  Dataset gen;
  if (o.trajectory.empty()) {
    gen.graphs = reverse_sample_many(model, o.sched, opts, count, o.seed);
  } else {
    // Same per-sample streams as reverse_sample_many, with each sample's
    // trajectory buffered so the file is written in sample order.
    gen.graphs.resize(count);
    std::vector<std::string> lines(count);
    parallel_for(count, [&](std::size_t i) {
      SampleOptions local = opts;
      std::string buf;
      local.on_step = [&](double t, const SymMatrix& w) {
        buf += Json{{"sample", i}, {"t", t}, {"W", MatrixJson(w)}}.dump();
        buf += '\n';
      };
      Rng rng(derive_seed(o.seed, i));
      gen.graphs[i] = reverse_sample(model, o.sched, local, rng);
      lines[i] = std::move(buf);
    });
    std::ofstream traj(o.trajectory, std::ios::binary);
    if (!traj) throw InputError("cannot open " + o.trajectory + " for writing");
    for (const auto& l : lines) traj << l;
  }
  gen.metadata = {{"generator", "reverse_sample"}, {"config", config.dump()}};
  write_dataset(std::filesystem::path(o.out), gen);

  Emit(out, {{"config", config},
             {"templates", model.num_templates()},
             {"samples", gen.size()}});
  err << "sampled " << gen.size() << " graph(s) on " << n << " nodes from "
      << model.num_templates() << " template(s); wrote " << o.out << "\n";
  return kExitOk;
}

NoveltyMode ParseNovelty(const std::string& s) {
  if (s == "isomorphism") return NoveltyMode::kIsomorphism;
  if (s == "nodes-edges") return NoveltyMode::kNodesAndEdges;
  throw InputError("unknown novelty mode '" + s +
                   "'; valid: isomorphism, nodes-edges");
}

int CmdEval(const EvalOptions& o, const CommonOptions& common,
            std::ostream& out, std::ostream& err) {
  const std::vector<std::string> names =
      o.patterns.empty() ? pattern_names() : o.patterns;
  const auto patterns = ResolvePatterns(names, common);
  const NoveltyMode mode = ParseNovelty(o.novelty);
  const Dataset train = read_dataset(o.train);
  const Dataset gen = read_dataset(o.gen);
  const EvalReport report = evaluate(train, gen, patterns, mode);

  Json config = BaseConfig("eval", common);
  config.update({{"train", o.train},
                 {"gen", o.gen},
                 {"patterns", names},
                 {"novelty", o.novelty}});
  Json per = Json::object();
  for (const auto& p : patterns) {
    const PatternReport& pr = report.per_pattern.at(p.name);
    per[p.name] = {{"tv", pr.tv},
                   {"train", MassJson(pr.train_hist)},
                   {"gen", MassJson(pr.gen_hist)},
                   {"train_counts", FrequencyJson(pr.train_hist)},
                   {"gen_counts", FrequencyJson(pr.gen_hist)}};
    err << p.name << ": TV " << pr.tv << "\n";
  }
  err << "novelty " << report.novelty << " (" << report.n_gen
      << " generated, " << report.n_train << " training)\n";
  Emit(out, {{"config", config},
             {"patterns", per},
             {"novelty", report.novelty},
             {"n_train", report.n_train},
             {"n_gen", report.n_gen}});
  return kExitOk;
}

int CmdVerify(const VerifyOptions& o, const CommonOptions& common,
              std::ostream& out, std::ostream& err) {
  const VerifyReport report = RunVerify(o);
  Json config = BaseConfig("verify", common);
  config.update({{"suite", o.suite},
                 {"n", o.n},
                 {"k", o.k},
                 {"trials", o.trials},
                 {"seed", o.seed},
                 {"t", o.t},
                 {"truncation", o.truncation},
                 {"edge_prob", o.edge_prob}});
  if (o.tolerance) config["tolerance"] = *o.tolerance;
  if (o.train) config["train"] = o.train->string();
  Json j = {{"config", config}};
  j.update(report.ToJson());
  Emit(out, j);
  for (const auto& c : report.checks) {
    err << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.value
        << " (tolerance " << c.tolerance << ")\n";
  }
  return report.pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Subgraph-count evaluation and exact-score graph diffusion"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("--threads", common.threads,
                 "Worker threads; 0 uses $SUBDIFF_THREADS or all cores")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--pattern-file", common.pattern_file,
                 "JSONL pattern definitions that extend or override the "
                 "built-in library")
      ->check(CLI::ExistingFile);

  CountOptions count;
  auto* c = app.add_subcommand("count", "Subgraph count histograms");
  c->add_option("--in", count.in, "Dataset JSONL")->required();
  c->add_option("--patterns", count.patterns, "Comma-separated pattern names")
      ->required()
      ->delimiter(',');

  GenOptions gen;
  auto* g = app.add_subcommand("gen-data", "Planted single-pattern dataset");
  g->add_option("--pattern", gen.pattern, "Pattern name")->required();
  g->add_option("--n", gen.n, "Nodes per graph")->required();
  g->add_option("--count", gen.count, "Number of graphs")->required();
  g->add_option("--decoration", gen.decoration, "none or tree")
      ->capture_default_str();
  g->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
  g->add_option("--max-retries", gen.max_retries,
                "Rejection budget per graph")
      ->capture_default_str();
  g->add_option("--out", gen.out, "Output dataset JSONL")->required();

  SampleCliOptions sample;
  auto* s = app.add_subcommand("sample", "Reverse diffusion with the exact score");
  s->add_option("--train", sample.train, "Training dataset JSONL")->required();
  s->add_option("--out", sample.out, "Output dataset JSONL")->required();
  s->add_option("--n", sample.n,
                "Graph size; 0 uses the first training graph's size")
      ->capture_default_str();
  s->add_option("--num-samples", sample.num_samples)->capture_default_str();
  s->add_option("--seed", sample.seed, "Sampler master seed")
      ->capture_default_str();
  s->add_option("--steps", sample.steps, "Euler-Maruyama steps")
      ->capture_default_str();
  s->add_option("--mode", sample.mode, "direct or series")
      ->capture_default_str();
  s->add_option("--threshold", sample.threshold, "Quantization threshold")
      ->capture_default_str();
  s->add_option("--beta-min", sample.sched.beta_min)->capture_default_str();
  s->add_option("--beta-max", sample.sched.beta_max)->capture_default_str();
  s->add_option("--t-min", sample.sched.t_min)->capture_default_str();
  s->add_option("--t-max", sample.sched.t_max)->capture_default_str();
  s->add_option("--perm-policy", sample.perm_policy, "auto, exhaustive or mc")
      ->capture_default_str();
  s->add_option("--mc-samples", sample.mc_samples,
                "Monte Carlo permutations (M)")
      ->capture_default_str();
  s->add_option("--perm-seed", sample.perm_seed,
                "Seed of the Monte Carlo permutations")
      ->capture_default_str();
  s->add_option("--truncation", sample.truncation, "Series order K")
      ->capture_default_str();
  s->add_option("--series-max-ratio", sample.series_max_ratio,
                "Largest admissible series ratio")
      ->capture_default_str();
  s->add_option("--trajectory", sample.trajectory,
                "Write per-step states as JSONL");

  EvalOptions eval;
  auto* e = app.add_subcommand("eval", "TV distances and novelty");
  e->add_option("--train", eval.train, "Training dataset JSONL")->required();
  e->add_option("--gen", eval.gen, "Generated dataset JSONL")->required();
  e->add_option("--patterns", eval.patterns,
                "Comma-separated pattern names (default: all)")
      ->delimiter(',');
  e->add_option("--novelty", eval.novelty, "isomorphism or nodes-edges")
      ->capture_default_str();

  VerifyOptions verify;
  double tolerance = 0.0;
  std::string verify_train;
  auto* v = app.add_subcommand("verify", "Numerical identity checks");
  v->add_option("--suite", verify.suite)
      ->required()
      ->check(CLI::IsMember(VerifySuites()));
  v->add_option("--n", verify.n, "Graph size; 0 uses the suite default")
      ->capture_default_str();
  v->add_option("--k", verify.k, "Expansion order (basis suite)")
      ->capture_default_str();
  v->add_option("--trials", verify.trials,
                "Random trials; 0 uses the suite default")
      ->capture_default_str();
  v->add_option("--seed", verify.seed)->capture_default_str();
  v->add_option("--t", verify.t, "Evaluation time (series suite)")
      ->capture_default_str();
  v->add_option("--truncation", verify.truncation, "Series order K")
      ->capture_default_str();
  v->add_option("--edge-prob", verify.edge_prob,
                "Edge probability of random graphs")
      ->capture_default_str();
  auto* tol_opt = v->add_option("--tolerance", tolerance,
                                "Override the suite tolerance");
  auto* train_opt = v->add_option("--train", verify_train,
                                  "Use graphs from this dataset as training set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    return app.exit(ex, out, err) == 0 ? kExitOk : kExitError;
  }
  if (tol_opt->count() > 0) verify.tolerance = tolerance;
  if (train_opt->count() > 0) verify.train = verify_train;
  if (common.threads > 0) set_thread_count(common.threads);

  try {
    if (c->parsed()) return CmdCount(count, common, out, err);
    if (g->parsed()) return CmdGenData(gen, common, out, err);
    if (s->parsed()) return CmdSample(sample, common, out, err);
    if (e->parsed()) return CmdEval(eval, common, out, err);
    if (v->parsed()) return CmdVerify(verify, common, out, err);
  } catch (const SeriesDivergenceError& ex) {
    err << "error: " << ex.what() << " (ratio " << ex.ratio() << ")\n";
    return kExitError;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace subdiff::cli
