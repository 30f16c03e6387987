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

// pnpseq command line: tables, analysis, experiment matrices, benchmarks.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pnpseq/analysis.hpp"
#include "pnpseq/experiment.hpp"
#include "pnpseq/pnp_table.hpp"
#include "pnpseq/sim.hpp"
#include "pnpseq/text.hpp"

namespace {

using namespace pnpseq;

constexpr int kExitConfig = 2;
constexpr int kExitPartial = 1;

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ConfigError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  bool to_stdout() const { return !file_; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void apply_robot_flag(ScenarioConfig& cfg, const std::string& robot) {
  if (robot.empty()) return;
  if (robot.rfind("table:", 0) == 0) {
    cfg.robot.kind = RobotKind::kTable;
    cfg.robot.table_path = robot.substr(6);
  } else {
    cfg.robot.kind = parse_robot_kind(robot);
  }
}

ScenarioConfig load_scenario(const std::string& path) {
  if (path.empty()) return ScenarioConfig{};
  return load_matrix(path).base;
}

// ---------------------------------------------------------------------------
// table build
// ---------------------------------------------------------------------------

struct TableArgs {
  std::string config;
  std::string robot = "scara";
  std::string out;
  int rows = 100;
  int cols = 100;
};

int cmd_table(const TableArgs& a) {
  ScenarioConfig cfg = load_scenario(a.config);
  apply_robot_flag(cfg, a.robot);
  std::unique_ptr<ReachModel> reach;
  switch (cfg.robot.kind) {
    case RobotKind::kTelescoping:
      reach = std::make_unique<TelescopingReach>(
          TelescopingArm{cfg.workspace.robot_base(), cfg.robot.v_e});
      break;
    case RobotKind::kScara:
      reach = std::make_unique<ScaraReach>(scara_arm_for(cfg.workspace, cfg.robot));
      break;
    case RobotKind::kTable:
      throw ConfigError("table build needs --robot telescoping or scara");
  }
  PnpTimeTable table = build_pnp_table(*reach, cfg.workspace, {a.rows, a.cols});
  if (a.out.empty()) {
    write_pnp_table(std::cout, table);
  } else {
    save_pnp_table(a.out, table);
  }
  std::fprintf(stderr, "%s: %dx%d cells, reachable fraction %.4f\n",
               table.source().c_str(), a.rows, a.cols,
               table.reachable_fraction());
  return 0;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  double y1 = 0.4;
  double y2 = 0.7;
  double v_e = 2.0;
  double lo = 0.4;
  double hi = 1.4;
  int steps = 101;
  std::string out;
  OrderStudyParams study;
};

int cmd_fx_sweep(const AnalyzeArgs& a) {
  auto samples = sweep_fx(a.y1, a.y2, a.v_e, a.lo, a.hi, a.steps);
  Output out(a.out);
  write_delta_csv(out.stream(), samples);
  return 0;
}

int cmd_root(const AnalyzeArgs& a) {
  double x0 = find_root(a.y1, a.y2, a.v_e, a.lo, a.hi);
  std::printf("%.9f\n", x0);
  return 0;
}

int cmd_order(const AnalyzeArgs& a) {
  auto records = order_distribution_study(a.study);
  Output out(a.out);
  write_order_csv(out.stream(), records);
  std::fprintf(stderr, "mean x: first pick %.4f, last pick %.4f\n",
               mean_x_at_rank(records, 0),
               mean_x_at_rank(records, a.study.n - 1));
  return 0;
}

// ---------------------------------------------------------------------------
// oneshot run / continuous run
// ---------------------------------------------------------------------------

struct RunArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string pick_log;
  std::string robot;
  int jobs = 1;
};

int cmd_run(const RunArgs& a, bool continuous) {
  if (a.config.empty()) throw ConfigError("--config is required");
  ExperimentMatrix m = load_matrix(a.config);
  apply_robot_flag(m.base, a.robot);
  if (a.seed) m.seed_base = *a.seed;
  if (m.base.continuous() != continuous) {
    throw ConfigError(continuous
                          ? "continuous run needs a poisson or uniform_square "
                            "arrival"
                          : "oneshot run needs a one_shot arrival");
  }
  std::vector<RunResult> results = run_matrix(m, a.jobs);

  Output out(a.out);
  write_metrics_csv(out.stream(), results);
  if (!a.pick_log.empty()) {
    std::ofstream log(a.pick_log);
    if (!log) throw ConfigError("cannot write '" + a.pick_log + "'");
    log << "cell,replicate,object_id,decision_time,pick_time,pick_x,pick_y\n";
    for (const RunResult& r : results) {
      if (!r.ok()) continue;
      for (const PickLogEntry& e : r.metrics->log) {
        write_csv_row(log, {std::to_string(r.cell),
                            std::to_string(r.replicate),
                            std::to_string(e.object_id),
                            format_double(e.decision_time),
                            format_double(e.pick_time),
                            format_double(e.pick_point.x),
                            format_double(e.pick_point.y)});
      }
    }
  }

  std::ostream& info = out.to_stdout() ? std::cerr : std::cout;
  write_summary(info, summarize(results));
  int failed = 0;
  for (const RunResult& r : results) {
    if (r.ok()) continue;
    ++failed;
    std::cerr << "cell " << r.cell << " replicate " << r.replicate
              << " failed: " << r.error << '\n';
  }
  if (failed > 0) {
    std::cerr << failed << " of " << results.size() << " runs failed\n";
    return kExitPartial;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct BenchArgs {
  std::string config;
  std::string robot;
  std::vector<std::string> algorithms{"opt_seq", "opt_seq_dp", "sub_opt_dp"};
  int n_min = 2;
  int n_max = 10;
  int n_step = 1;
  int reps = 5;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_bench(const BenchArgs& a) {
  BenchParams p;
  p.scenario = load_scenario(a.config);
  apply_robot_flag(p.scenario, a.robot);
  if (p.scenario.continuous()) p.scenario.arrival = OneShotBox{};
  p.algorithms.clear();
  for (const std::string& s : a.algorithms) {
    p.algorithms.push_back(parse_policy_kind(s));
  }
  p.n_min = a.n_min;
  p.n_max = a.n_max;
  p.n_step = a.n_step;
  p.repetitions = a.reps;
  p.seed = a.seed;
  auto rows = run_bench(p);
  Output out(a.out);
  write_bench_csv(out.stream(), rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pick-and-place sequencing for conveyor robots"};
  app.require_subcommand(1);
  std::function<int()> action;

  // table build
  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Precomputed PnP time tables");
  table->require_subcommand(1);
  auto* table_build = table->add_subcommand("build", "Build a time table");
  table_build->add_option("--config", table_args.config, "Scenario file");
  table_build->add_option("--robot", table_args.robot, "telescoping or scara");
  table_build->add_option("--rows", table_args.rows, "Rows along y");
  table_build->add_option("--cols", table_args.cols, "Columns along x");
  table_build->add_option("--out", table_args.out, "Output file");
  table_build->callback([&] { action = [&] { return cmd_table(table_args); }; });

  // analyze
  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Two-object and order studies");
  analyze->require_subcommand(1);
  auto add_pair_opts = [&](CLI::App* c) {
    c->add_option("--y1", an.y1);
    c->add_option("--y2", an.y2);
    c->add_option("--ve", an.v_e, "Arm speed");
    c->add_option("--lo", an.lo);
    c->add_option("--hi", an.hi);
  };
  auto* fx = analyze->add_subcommand("fx-sweep", "Sample f(x) on a grid");
  add_pair_opts(fx);
  fx->add_option("--steps", an.steps);
  fx->add_option("--out", an.out);
  fx->callback([&] { action = [&] { return cmd_fx_sweep(an); }; });
  auto* root = analyze->add_subcommand("root", "Sign change of f(x)");
  add_pair_opts(root);
  root->callback([&] { action = [&] { return cmd_root(an); }; });
  auto* order = analyze->add_subcommand("order-distribution",
                                        "Ranks of optimal picking orders");
  order->add_option("--instances", an.study.num_instances);
  order->add_option("--n", an.study.n);
  order->add_option("--x-min", an.study.box.x_min);
  order->add_option("--x-max", an.study.box.x_max);
  order->add_option("--y-min", an.study.box.y_min);
  order->add_option("--y-max", an.study.box.y_max);
  order->add_option("--ve", an.study.v_e);
  order->add_option("--seed", an.study.seed);
  order->add_option("--out", an.out);
  order->callback([&] { action = [&] { return cmd_order(an); }; });

  // oneshot run / continuous run
  RunArgs run_args;
  auto add_run = [&](const char* name, const char* help, bool continuous) {
    auto* group = app.add_subcommand(name, help);
    group->require_subcommand(1);
    auto* run = group->add_subcommand("run", "Run an experiment matrix");
    run->add_option("--config", run_args.config, "Experiment file")
        ->required();
    run->add_option("--seed", run_args.seed, "Seed of the first replicate");
    run->add_option("--out", run_args.out, "Metrics CSV");
    run->add_option("--pick-log", run_args.pick_log, "Per-pick CSV");
    run->add_option("--jobs", run_args.jobs, "Worker threads")
        ->check(CLI::PositiveNumber);
    run->add_option("--robot", run_args.robot,
                    "telescoping, scara or table:<file>");
    run->callback([&, continuous] {
      action = [&, continuous] { return cmd_run(run_args, continuous); };
    });
  };
  add_run("oneshot", "One batch of objects", false);
  add_run("continuous", "Objects arriving over time", true);

  // bench
  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Planner timing");
  bench->add_option("--config", bench_args.config, "Scenario file");
  bench->add_option("--robot", bench_args.robot);
  bench->add_option("--algorithms", bench_args.algorithms)->delimiter(',');
  bench->add_option("--n-min", bench_args.n_min);
  bench->add_option("--n-max", bench_args.n_max);
  bench->add_option("--n-step", bench_args.n_step);
  bench->add_option("--reps", bench_args.reps);
  bench->add_option("--seed", bench_args.seed);
  bench->add_option("--out", bench_args.out);
  bench->callback([&] { action = [&] { return cmd_bench(bench_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return action();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const GuardLimit& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPartial;
  }
}
