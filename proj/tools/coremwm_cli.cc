// Copyright 2026 The coremwm Authors
//
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

// coremwm command-line front end.
//
// Exit codes: 0 ok, 2 configuration/usage, 3 input/output, 4 internal check.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coremwm/analysis.h"
#include "coremwm/errors.h"
#include "coremwm/experiments.h"
#include "coremwm/factor_lp.h"
#include "coremwm/generators.h"
#include "coremwm/hard_instance.h"
#include "coremwm/pipeline.h"
#include "json.hpp"

namespace {

using coremwm::ConfigError;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

struct GraphSource {
  std::string input;
  std::string dedup = "error";
  bool drop_nonpositive = false;
  std::string gen;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string weights = "uniform";
  std::uint64_t gen_seed = 1;
};

struct ClusterOpts {
  std::uint32_t k = 1;
  std::optional<double> c;
  std::optional<double> epsilon;
  std::uint64_t seed = 1;
  std::size_t seeds = 1;
  std::string post = "best-of";
  std::size_t exact_max_edges = 24;
  std::uint32_t ls_rounds = 4;
  std::uint32_t workers = 1;
};

struct ReportOpts {
  std::string format = "tsv";
  std::string out;
  bool deterministic = false;
};

void add_source(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--input", src.input, "edge-list file ('u v w' per line)");
  cmd->add_option("--dedup", src.dedup, "duplicate pairs: error|max|sum")
      ->check(CLI::IsMember({"error", "max", "keep-max", "sum"}));
  cmd->add_flag("--drop-nonpositive", src.drop_nonpositive,
                "drop edges with w <= 0 instead of failing");
  cmd->add_option("--gen", src.gen, "synthetic graph: uniform|powerlaw")
      ->check(CLI::IsMember({"uniform", "powerlaw"}));
  cmd->add_option("--n", src.n, "generator vertex count");
  cmd->add_option("--m", src.m, "generator edge count");
  cmd->add_option("--weights", src.weights, "generator weights: uniform|exp")
      ->check(CLI::IsMember({"uniform", "exp"}));
  cmd->add_option("--gen-seed", src.gen_seed, "generator seed");
}

void add_cluster(CLI::App* cmd, ClusterOpts& opts, bool with_post = true) {
  cmd->add_option("--k", opts.k, "machine count")->check(CLI::PositiveNumber);
  auto* c = cmd->add_option("--c", opts.c, "expected multiplicity (1 <= c <= k)");
  auto* eps = cmd->add_option("--epsilon", opts.epsilon,
                              "maps to c = max(1, ceil((1/eps) ln(1/eps)))");
  c->excludes(eps);
  cmd->add_option("--seed", opts.seed, "first clustering seed");
  cmd->add_option("--seeds", opts.seeds, "number of seeds (seed, seed+1, ...)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", opts.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  if (with_post) {
    cmd->add_option("--post", opts.post,
                    "post-processing: greedy|best-of|exact|local-search");
    cmd->add_option("--exact-max-edges", opts.exact_max_edges,
                    "largest union solved exactly by --post exact");
    cmd->add_option("--ls-rounds", opts.ls_rounds, "local-search passes");
  }
}

void add_report(CLI::App* cmd, ReportOpts& rep) {
  cmd->add_option("--report", rep.format, "report format: tsv|json")
      ->check(CLI::IsMember({"tsv", "json"}));
  cmd->add_option("--report-out", rep.out, "report file (default stdout)");
  cmd->add_flag("--deterministic-report", rep.deterministic,
                "omit timings so identical runs give identical reports");
}

coremwm::WeightedGraph load_graph(const GraphSource& src) {
  const bool has_input = !src.input.empty();
  const bool has_gen = !src.gen.empty();
  if (has_input == has_gen) {
    throw ConfigError("give exactly one of --input or --gen");
  }
  if (has_input) {
    coremwm::LoadOptions opts;
    opts.dedup = coremwm::parse_dedup_policy(src.dedup);
    opts.drop_nonpositive = src.drop_nonpositive;
    return coremwm::load_edge_list_file(src.input, opts);
  }
  coremwm::GeneratorConfig gen;
  gen.topology = coremwm::parse_topology(src.gen);
  gen.weights = coremwm::parse_weight_dist(src.weights);
  gen.n = src.n;
  gen.m = src.m;
  gen.seed = src.gen_seed;
  return coremwm::generate_graph(gen);
}

coremwm::PipelineConfig pipeline_config(const ClusterOpts& opts) {
  coremwm::PipelineConfig cfg;
  cfg.cluster.k = opts.k;
  cfg.cluster.c = opts.epsilon ? coremwm::multiplicity_for_epsilon(*opts.epsilon)
                               : opts.c.value_or(1.0);
  cfg.cluster.seed = opts.seed;
  cfg.post.mode = coremwm::parse_post_mode(opts.post);
  cfg.post.exact_max_union_edges = opts.exact_max_edges;
  cfg.post.local_search_rounds = opts.ls_rounds;
  cfg.workers = opts.workers;
  cfg.validate();
  return cfg;
}

std::string fixed2(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << v;
  return s.str();
}

// Sink that is stdout unless a path is given.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw coremwm::IoError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw coremwm::IoError("write failed");
  }

 private:
  std::ofstream file_;
};

// A flat key/value report rendered as TSV lines or a JSON object.
class KvReport {
 public:
  template <typename T>
  void set(const std::string& key, const T& value) {
    json_[key] = value;
  }
  void emit(const ReportOpts& rep) {
    Output out(rep.out);
    if (rep.format == "json") {
      out.stream() << json_.dump(2) << '\n';
    } else {
      for (const auto& [key, value] : json_.items()) {
        out.stream() << key << '\t'
                     << (value.is_string() ? value.get<std::string>()
                                           : value.dump())
                     << '\n';
      }
    }
    out.finish();
  }

 private:
  ordered_json json_ = ordered_json::object();
};

// A table rendered as TSV (header + rows) or a JSON array of objects.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}
  void add(std::vector<ordered_json> row) { rows_.push_back(std::move(row)); }
  void emit(const ReportOpts& rep, const ordered_json& meta = {}) {
    Output out(rep.out);
    if (rep.format == "json") {
      ordered_json doc = meta.is_null() ? ordered_json::object() : meta;
      doc["rows"] = ordered_json::array();
      for (const auto& r : rows_) {
        ordered_json obj = ordered_json::object();
        for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = r[i];
        doc["rows"].push_back(obj);
      }
      out.stream() << doc.dump(2) << '\n';
    } else {
      if (!meta.is_null()) {
        for (const auto& [key, value] : meta.items()) {
          out.stream() << "# " << key << '\t'
                       << (value.is_string() ? value.get<std::string>()
                                             : value.dump())
                       << '\n';
        }
      }
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        out.stream() << (i ? "\t" : "") << columns_[i];
      }
      out.stream() << '\n';
      for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i) {
          out.stream() << (i ? "\t" : "")
                       << (r[i].is_string() ? r[i].get<std::string>()
                                            : r[i].dump());
        }
        out.stream() << '\n';
      }
    }
    out.finish();
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<ordered_json>> rows_;
};

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size()) {
      throw ConfigError("bad number '" + item + "' in list '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

// ---- commands ---------------------------------------------------------------

int cmd_match(const GraphSource& src, const ClusterOpts& opts,
              const ReportOpts& rep, const std::string& matching_out,
              bool sequential) {
  const auto graph = load_graph(src);
  const auto baseline = coremwm::greedy(graph).matching;

  KvReport report;
  report.set("command", "match");
  report.set("vertices", graph.num_vertices());
  report.set("edges", graph.num_edges());

  const coremwm::Matching* final = &baseline;
  std::optional<coremwm::PipelineResult> run;
  if (sequential) {
    report.set("mode", "sequential");
  } else {
    const auto cfg = pipeline_config(opts);
    run = coremwm::run_pipeline(graph, cfg, &baseline);
    final = &run->final;
    report.set("mode", "pipeline");
    report.set("k", cfg.cluster.k);
    report.set("c", cfg.cluster.c);
    report.set("seed", cfg.cluster.seed);
    report.set("post", std::string(coremwm::post_mode_name(run->post_used)));
    report.set("best_of_source", run->best_of_source);
    report.set("union_edges", run->union_graph.num_edges());
    report.set("budget_edges", run->memory.budget_edges);
    report.set("max_machine_edges", run->memory.max_machine_edges);
    report.set("over_budget", run->memory.over_budget);
    for (const auto& note : run->notes) std::cerr << "note: " << note << '\n';
  }
  report.set("weight", coremwm::format_weight(final->total_weight()));
  report.set("cardinality", final->size());
  report.set("baseline_weight", coremwm::format_weight(baseline.total_weight()));
  report.set("baseline_cardinality", baseline.size());
  const auto q = coremwm::quality_report(*final, baseline);
  report.set("weight_pct", q.weight_unbounded ? "inf" : fixed2(q.weight_pct));
  report.set("cardinality_pct",
             q.cardinality_unbounded ? "inf" : fixed2(q.cardinality_pct));
  if (run && !rep.deterministic) {
    report.set("cluster_ms", run->timings.cluster_ms);
    report.set("coreset_ms", run->timings.coreset_ms);
    report.set("post_ms", run->timings.post_ms);
    report.set("total_ms", run->timings.total_ms);
  }

  if (!matching_out.empty()) {
    Output out(matching_out);
    coremwm::write_matching(*final, graph.dictionary(), out.stream());
    out.finish();
  }
  report.emit(rep);
  return kExitOk;
}

int cmd_bench(const GraphSource& src, const ClusterOpts& opts,
              const ReportOpts& rep) {
  const auto graph = load_graph(src);
  const auto cfg = pipeline_config(opts);
  const auto seeds = coremwm::seed_range(opts.seed, opts.seeds);
  const auto summary = coremwm::run_bench(graph, cfg, seeds);

  std::vector<std::string> cols = {"seed", "weight_pct", "cardinality_pct",
                                   "union_edges", "max_machine_edges"};
  if (!rep.deterministic) {
    cols.insert(cols.end(), {"sequential_ms", "pipeline_ms", "speedup"});
  }
  Table table(cols);
  for (const auto& r : summary.rows) {
    std::vector<ordered_json> row = {r.seed, fixed2(r.quality.weight_pct),
                                     fixed2(r.quality.cardinality_pct),
                                     r.union_edges, r.max_machine_edges};
    if (!rep.deterministic) {
      row.insert(row.end(), {fixed2(r.sequential_ms), fixed2(r.pipeline_ms),
                             fixed2(r.speedup)});
    }
    table.add(std::move(row));
  }
  ordered_json meta = {{"command", "bench"},
                       {"vertices", graph.num_vertices()},
                       {"edges", graph.num_edges()},
                       {"k", cfg.cluster.k},
                       {"c", cfg.cluster.c},
                       {"workers", cfg.workers},
                       {"post", std::string(coremwm::post_mode_name(cfg.post.mode))},
                       {"mean_weight_pct", fixed2(summary.mean_weight_pct)},
                       {"mean_cardinality_pct", fixed2(summary.mean_cardinality_pct)}};
  if (!rep.deterministic) meta["mean_speedup"] = fixed2(summary.mean_speedup);
  table.emit(rep, meta);
  return kExitOk;
}

int cmd_sweep(const GraphSource& src, const ClusterOpts& opts,
              const ReportOpts& rep, const std::string& c_list) {
  const auto c_values = parse_double_list(c_list);
  auto base_opts = opts;
  base_opts.c.reset();
  base_opts.epsilon.reset();
  const auto cfg = pipeline_config(base_opts);
  const auto graph = load_graph(src);
  const auto rows = coremwm::sweep_multiplicity(
      graph, cfg, c_values, coremwm::seed_range(opts.seed, opts.seeds));
  Table table({"c", "weight_pct", "cardinality_pct"});
  for (const auto& r : rows) {
    table.add({r.c, fixed2(r.mean_weight_pct), fixed2(r.mean_cardinality_pct)});
  }
  table.emit(rep, {{"command", "sweep-mult"},
                   {"k", cfg.cluster.k},
                   {"seeds", opts.seeds}});
  return kExitOk;
}

int cmd_sampling(const GraphSource& src, const ClusterOpts& opts,
                 const ReportOpts& rep, const std::string& k_list) {
  std::vector<std::uint32_t> ks;
  for (double k : parse_double_list(k_list)) {
    if (k < 1 || k != static_cast<std::uint32_t>(k)) {
      throw ConfigError("k values must be positive integers");
    }
    ks.push_back(static_cast<std::uint32_t>(k));
  }
  const auto cfg = pipeline_config(opts);
  const auto graph = load_graph(src);
  const auto rows = coremwm::sampling_experiment(
      graph, cfg, ks, coremwm::seed_range(opts.seed, opts.seeds));
  Table table({"k", "best_single_pct", "pipeline_pct", "m1_pct"});
  for (const auto& r : rows) {
    table.add({r.k, fixed2(r.best_single_pct), fixed2(r.pipeline_pct),
               fixed2(r.m1_pct)});
  }
  table.emit(rep, {{"command", "sampling"},
                   {"c", cfg.cluster.c},
                   {"seeds", opts.seeds}});
  return kExitOk;
}

int cmd_lp(const ReportOpts& rep, const std::vector<std::string>& mus,
           bool base_only) {
  std::vector<std::optional<coremwm::Rational>> caps = {std::nullopt};
  if (!base_only) {
    if (mus.empty()) {
      for (int i = 0; i <= 20; ++i) caps.emplace_back(coremwm::Rational(i, 20));
    } else {
      for (const auto& m : mus) caps.emplace_back(coremwm::Rational::parse(m));
    }
  }
  Table table({"mu", "z_star", "z_star_decimal", "ratio"});
  for (const auto& cap : caps) {
    const auto sol = coremwm::solve_lp(coremwm::build_lp(cap));
    std::ostringstream z, r;
    z << std::setprecision(6) << sol.z_star.to_double();
    r << std::fixed << std::setprecision(4) << sol.ratio.to_double();
    table.add({cap ? cap->str() : std::string("none"), sol.z_star.str(), z.str(),
               r.str()});
  }
  table.emit(rep, {{"command", "lp"}});
  return kExitOk;
}

int cmd_hard(const ClusterOpts& opts, const ReportOpts& rep,
             const coremwm::HardParams& params_in, const std::string& emit_path,
             const std::string& sidecar_path) {
  coremwm::HardParams params = params_in;
  params.k = opts.k;
  params.c = opts.c.value_or(1.0);
  params.validate();
  const auto seeds = coremwm::seed_range(opts.seed, opts.seeds);

  if (!emit_path.empty() || !sidecar_path.empty()) {
    const auto inst = coremwm::generate_hard(params, seeds.front());
    if (!emit_path.empty()) {
      Output out(emit_path);
      coremwm::write_edge_list(inst.graph, out.stream());
      out.finish();
    }
    if (!sidecar_path.empty()) {
      Output out(sidecar_path);
      coremwm::write_hard_sidecar(inst, out.stream());
      out.finish();
    }
  }

  const auto report = coremwm::hard_experiment(params, seeds, opts.workers);
  Table table({"seed", "edges", "ab_edges", "opt", "final", "union_edges",
               "planted_in_union", "mean_partition_ab", "structure"});
  for (const auto& r : report.rows) {
    table.add({r.seed, r.edges, r.ab_edges, r.opt, r.final_size, r.union_edges,
               fixed2(r.planted_in_union), fixed2(r.mean_partition_ab),
               r.structure_ok ? "ok" : "FAIL"});
  }
  table.emit(rep, {{"command", "hard"},
                   {"n", params.n},
                   {"k", params.k},
                   {"c", params.c},
                   {"alpha", params.alpha},
                   {"gamma", params.gamma},
                   {"n_ab", params.n_ab()},
                   {"p_ab", params.p_ab()},
                   {"expected_ab_edges", params.expected_ab_edges()},
                   {"mean_final", fixed2(report.mean_final)},
                   {"mean_opt", fixed2(report.mean_opt)}});
  for (const auto& r : report.rows) {
    if (!r.structure_ok) return kExitInternal;
  }
  return kExitOk;
}

int cmd_analyze(const GraphSource& src, const ClusterOpts& opts,
                const ReportOpts& rep, std::uint32_t machine) {
  const auto graph = load_graph(src);
  coremwm::AnalysisOptions aopts;
  aopts.cluster = pipeline_config(opts).cluster;
  aopts.machine = machine;
  if (graph.num_edges() > aopts.limits.max_edges ||
      graph.num_vertices() > aopts.limits.max_vertices) {
    throw coremwm::LimitError(
        "analyze needs the exact oracle: graph has " +
        std::to_string(graph.num_vertices()) + " vertices and " +
        std::to_string(graph.num_edges()) + " edges, limits are " +
        std::to_string(aopts.limits.max_vertices) + " and " +
        std::to_string(aopts.limits.max_edges));
  }

  Table table({"seed", "F10", "F12", "F13", "B11", "B12", "B13", "M1", "opt_G",
               "opt_H", "F1", "output", "greedy_H", "charging", "union_edges",
               "lp_feasible", "output_ratio", "checks"});
  bool all_ok = true;
  for (std::uint64_t seed : coremwm::seed_range(opts.seed, opts.seeds)) {
    aopts.cluster.seed = seed;
    const auto row = coremwm::analyze_run(graph, aopts);
    const auto lp = coremwm::empirical_lp_point(row);
    const bool ok = row.all_checks_pass() && (lp.degenerate || lp.ok());
    all_ok = all_ok && ok;
    auto w = [](double v) { return coremwm::format_weight(v); };
    table.add({row.seed, w(row.f10), w(row.f12), w(row.f13), w(row.b11),
               w(row.b12), w(row.b13), w(row.m1), w(row.opt_g), w(row.opt_h),
               w(row.free_all), w(row.output), w(row.greedy_h), w(row.charging),
               row.union_edges,
               lp.degenerate ? "degenerate" : (lp.feasible() ? "yes" : "no"),
               lp.degenerate ? std::string("-") : fixed2(lp.output_ratio),
               ok ? "pass" : "FAIL"});
  }
  table.emit(rep, {{"command", "analyze"},
                   {"vertices", graph.num_vertices()},
                   {"edges", graph.num_edges()},
                   {"k", aopts.cluster.k},
                   {"c", aopts.cluster.c},
                   {"machine", machine}});
  return all_ok ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coremwm: distributed maximum-weight matching via randomized "
               "greedy coresets"};
  app.require_subcommand(1);

  GraphSource src;
  ClusterOpts opts;
  ReportOpts rep;
  std::string matching_out;
  bool sequential = false;
  std::string c_list = "1,2,4";
  std::string k_list = "4,16,64";
  std::vector<std::string> mus;
  bool lp_base_only = false;
  coremwm::HardParams hard{.n = 1024, .k = 32, .c = 2, .alpha = 2, .gamma = 0.1};
  std::string emit_path, sidecar_path;
  std::uint32_t machine = 0;

  auto* match = app.add_subcommand("match", "run the two-round pipeline once");
  add_source(match, src);
  add_cluster(match, opts);
  add_report(match, rep);
  match->add_option("--out", matching_out, "matching file (u v w lines)");
  match->add_flag("--sequential", sequential,
                  "skip the pipeline and output sequential greedy");

  auto* bench = app.add_subcommand("bench", "quality and speed-up vs sequential greedy");
  add_source(bench, src);
  add_cluster(bench, opts);
  add_report(bench, rep);

  auto* sweep = app.add_subcommand("sweep-mult", "quality as a function of c");
  add_source(sweep, src);
  add_cluster(sweep, opts);
  add_report(sweep, rep);
  sweep->add_option("--c-list", c_list, "comma-separated multiplicities");

  auto* sampling = app.add_subcommand(
      "sampling", "best single coreset vs full pipeline as k grows");
  add_source(sampling, src);
  add_cluster(sampling, opts);
  add_report(sampling, rep);
  sampling->add_option("--k-list", k_list, "comma-separated machine counts");

  auto* lp = app.add_subcommand("lp", "solve the factor-revealing LP");
  add_report(lp, rep);
  lp->add_option("--mu", mus, "M1 caps (decimal or a/b); default 0,0.05,..,1")
      ->delimiter(',');
  lp->add_flag("--base-only", lp_base_only, "only the uncapped LP");

  auto* hard_cmd = app.add_subcommand("hard", "lower-bound family experiment");
  add_cluster(hard_cmd, opts, /*with_post=*/false);
  add_report(hard_cmd, rep);
  hard_cmd->add_option("--n", hard.n, "vertices per side");
  hard_cmd->add_option("--alpha", hard.alpha, "target approximation");
  hard_cmd->add_option("--gamma", hard.gamma, "constant in (0, 1/8)");
  hard_cmd->add_option("--emit", emit_path, "write the first seed's graph");
  hard_cmd->add_option("--sidecar", sidecar_path,
                       "write A, B and the planted matching of the first seed");

  auto* analyze = app.add_subcommand(
      "analyze", "free/blocked charging diagnostics on oracle-size graphs");
  add_source(analyze, src);
  add_cluster(analyze, opts, /*with_post=*/false);
  add_report(analyze, rep);
  analyze->add_option("--machine", machine, "machine whose run is analysed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*match) return cmd_match(src, opts, rep, matching_out, sequential);
    if (*bench) return cmd_bench(src, opts, rep);
    if (*sweep) return cmd_sweep(src, opts, rep, c_list);
    if (*sampling) return cmd_sampling(src, opts, rep, k_list);
    if (*lp) return cmd_lp(rep, mus, lp_base_only);
    if (*hard_cmd) {
      if (hard_cmd->count("--k") == 0) opts.k = hard.k;
      if (hard_cmd->count("--c") == 0) opts.c = hard.c;
      return cmd_hard(opts, rep, hard, emit_path, sidecar_path);
    }
    if (*analyze) return cmd_analyze(src, opts, rep, machine);
  } catch (const coremwm::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitIo;
  } catch (const coremwm::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const coremwm::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const coremwm::LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitConfig;
}
