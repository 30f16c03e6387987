// Copyright 2026 The pnpseq Authors
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

#ifndef PNPSEQ_EXPERIMENT_HPP_
#define PNPSEQ_EXPERIMENT_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pnpseq/sim.hpp"

// Scenario files, experiment matrices and the runner behind the CLI.
// The file format is JSON with comments; see docs/config_format.md.

namespace pnpseq {

// Throws ConfigError on malformed text, unknown keys or invalid values.
ScenarioConfig parse_scenario(std::string_view text);
// Canonical form: every field present, fixed key order, two-space indent.
std::string dump_scenario(const ScenarioConfig& cfg);

// FNV-1a of the canonical scenario with the seed zeroed, in hex.
std::string config_hash(const ScenarioConfig& cfg);

struct Sweep {
  std::string path;                 // dotted key, e.g. "arrival.lambda"
  std::vector<std::string> values;  // JSON literals
};

struct ExperimentMatrix {
  ScenarioConfig base;
  std::vector<Sweep> sweeps;  // cross product, first sweep varies slowest
  int repetitions = 1;
  std::uint64_t seed_base = 1;

  std::size_t cell_count() const;
};

// A scenario file with an optional "matrix" section:
//   "matrix": {"repetitions": 100, "seed_base": 1,
//              "sweeps": {"policy.kind": ["fifo", "spt"], ...}}
ExperimentMatrix parse_matrix(std::string_view text);
std::string dump_matrix(const ExperimentMatrix& m);

ExperimentMatrix load_matrix(const std::string& path);

// The scenario of one cell with one sweep setting applied. Throws
// ConfigError for paths that do not name a scenario field.
ScenarioConfig apply_override(const ScenarioConfig& cfg, std::string_view path,
                              std::string_view json_value);

struct RunResult {
  std::size_t cell = 0;
  int replicate = 0;
  std::vector<std::pair<std::string, std::string>> settings;  // sweep values
  ScenarioConfig config;
  std::string hash;
  std::optional<SimMetrics> metrics;
  std::string error;  // set when the run failed

  bool ok() const { return metrics.has_value(); }
};

// Runs every (cell, replicate) pair, `jobs` at a time. Replicate r uses seed
// seed_base + r. Failures become error rows; the rest of the matrix still
// runs. Results come back in (cell, replicate) order.
std::vector<RunResult> run_matrix(const ExperimentMatrix& m, int jobs = 1);

void write_metrics_csv(std::ostream& out, std::span<const RunResult> results);

// Per group of identical sweep settings (ignoring the policy), each policy
// is compared with sub_opt_dp on the same seeds: the mean of per-run
// total_time ratios for one-shot runs, the mean picked_ratio difference for
// continuous runs.
struct SummaryRow {
  std::string group;
  std::string policy;
  int runs = 0;
  double mean_total_time = 0.0;
  double mean_picked_ratio = 0.0;
  std::optional<double> vs_subopt;
};

std::vector<SummaryRow> summarize(std::span<const RunResult> results);
void write_summary(std::ostream& out, std::span<const SummaryRow> rows);

// Planner timing on random one-shot instances.
struct BenchParams {
  std::vector<PolicyKind> algorithms{PolicyKind::kOptSeq,
                                     PolicyKind::kOptSeqDp,
                                     PolicyKind::kSubOptDp};
  int n_min = 2;
  int n_max = 10;
  int n_step = 1;
  int repetitions = 5;
  std::uint64_t seed = 1;
  ScenarioConfig scenario;  // workspace, robot, spawn band
};

struct BenchRow {
  PolicyKind algorithm = PolicyKind::kSubOptDp;
  int n = 0;
  int repetitions = 0;
  double mean_seconds = 0.0;
  double min_seconds = 0.0;
};

// One untimed warm-up plan per (algorithm, n), then `repetitions` timed
// plans on fresh instances. Sizes above an algorithm's guard are skipped.
std::vector<BenchRow> run_bench(const BenchParams& params);
void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace pnpseq

#endif  // PNPSEQ_EXPERIMENT_HPP_
