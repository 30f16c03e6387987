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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Thresholds are fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pnpseq/analysis.hpp"
#include "pnpseq/experiment.hpp"
#include "pnpseq/pnp_table.hpp"
#include "pnpseq/rng.hpp"
#include "pnpseq/sequencing.hpp"
#include "pnpseq/sim.hpp"

#ifndef PNPSEQ_CLI_PATH
#define PNPSEQ_CLI_PATH "pnpseq"
#endif

using namespace pnpseq;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Uniform objects in [x_min, x_max] x [0, y_top], ids 0..n-1.
std::vector<SnapshotObject> random_batch(Rng& rng, int n, double x_min,
                                         double x_max, double y_top) {
  std::vector<SnapshotObject> objs;
  for (int i = 0; i < n; ++i) {
    double x = rng.uniform(x_min, x_max);
    double y = rng.uniform(0.0, y_top);
    objs.push_back({i, {x, y}});
  }
  return objs;
}

// 1
Outcome root_via_cli() {
  const std::string cmd = std::string(PNPSEQ_CLI_PATH) +
                          " analyze root --y1 0.4 --y2 0.7 --ve 2 --lo 0.4"
                          " --hi 1.4";
  auto t0 = Clock::now();
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return {false, "cannot start " + cmd};
  char buf[128] = {0};
  std::string out;
  while (std::fgets(buf, sizeof buf, p) != nullptr) out += buf;
  const int status = pclose(p);
  const double secs = seconds_since(t0);
  double x0 = std::strtod(out.c_str(), nullptr);
  bool ok = status == 0 && std::abs(x0 - 0.65) <= 0.02 && secs < 0.1;
  return {ok, "x0=" + fmt("%.6f", x0) + " t=" + fmt("%.3fs", secs)};
}

// 2
Outcome two_object_magnitudes() {
  TwoObjectTimes t = two_object_times(1.45, 1.45, 0.4, 0.7, 2.0);
  const double diff = t.t12 - t.t21;
  const double loss = diff / t.t21;
  bool ok = std::abs(t.t21 - 0.77) <= 0.02 && std::abs(diff - 0.09) <= 0.02 &&
            loss >= 0.10 && loss <= 0.14;
  return {ok, "t21=" + fmt("%.4f", t.t21) + " t12-t21=" + fmt("%.4f", diff) +
                  " loss=" + fmt("%.2f%%", 100.0 * loss)};
}

// 3
Outcome dp_equals_brute_force() {
  auto t0 = Clock::now();
  TelescopingModel model({{0.0, 0.0}, 3.0}, Workspace::standard());
  Rng rng(3, Stream::kStudy);
  double worst = 0.0;
  bool calls_ok = true;
  bool keys_ok = true;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 8;
    PlanningSnapshot snap(random_batch(rng, n, 0.0, 5.0, 5.0), model);
    PlanStats st;
    PickPlan dp = opt_seq_dp(snap, &st);
    PickPlan bf = opt_seq(snap);
    if (dp.completed() != bf.completed()) keys_ok = false;
    worst = std::max(worst, std::abs(dp.elapsed() - bf.elapsed()));
    const std::uint64_t bound = static_cast<std::uint64_t>(n) << (n - 1);
    if (st.pnp_calls > bound) calls_ok = false;
  }
  const double secs = seconds_since(t0);
  bool ok = keys_ok && calls_ok && worst <= 1e-9 && secs < 30.0;
  return {ok, "max|dT|=" + fmt("%.2e", worst) +
                  (calls_ok ? " calls<=n2^(n-1)" : " CALL BOUND EXCEEDED") +
                  " t=" + fmt("%.2fs", secs)};
}

// 4
Outcome subopt_gap() {
  auto t0 = Clock::now();
  TelescopingModel model({{0.0, 0.0}, 15.0}, Workspace::standard());
  Rng rng(4, Stream::kStudy);
  double sum = 0.0;
  double worst = 0.0;
  int infeasible = 0;
  for (int i = 0; i < 100; ++i) {
    PlanningSnapshot snap(random_batch(rng, 15, 3.0, 5.0, 5.0), model);
    PickPlan dp = opt_seq_dp(snap);
    PickPlan sub = sub_opt_dp(snap, {15, 9, GreedyPolicy::kFifo});
    if (!dp.feasible || !sub.feasible) {
      ++infeasible;
      continue;
    }
    const double gap = sub.total_time / dp.total_time - 1.0;
    sum += gap;
    worst = std::max(worst, gap);
  }
  const double secs = seconds_since(t0);
  const double mean = sum / (100 - infeasible);
  bool ok = infeasible == 0 && mean <= 0.005 && worst <= 0.02 && secs < 60.0;
  return {ok, "mean gap=" + fmt("%.3f%%", 100.0 * mean) +
                  " max gap=" + fmt("%.3f%%", 100.0 * worst) +
                  " (target 0.05%) t=" + fmt("%.2fs", secs)};
}

// 5
Outcome scaling() {
  Workspace long_ws(-1000.0, 5.0, 5.0);
  TelescopingModel model({{0.0, 0.0}, 15.0}, long_ws);
  Rng rng(5, Stream::kStudy);
  auto timed = [&](int n, const std::function<PickPlan(const PlanningSnapshot&)>&
                             plan) {
    PlanningSnapshot snap(random_batch(rng, n, 3.0, 5.0, 5.0), model);
    auto t0 = Clock::now();
    PickPlan p = plan(snap);
    const double s = seconds_since(t0);
    return p.order.size() == static_cast<std::size_t>(n) ? s : 1e9;
  };
  const double a = timed(8, [](const auto& s) { return opt_seq(s); });
  const double b = timed(15, [](const auto& s) { return opt_seq_dp(s); });
  const double c = timed(20, [](const auto& s) { return opt_seq_dp(s); });
  const double d = timed(100, [](const auto& s) { return sub_opt_dp(s); });
  bool ok = a < 1.0 && b < 1.0 && c < 30.0 && d < 2.0;
  return {ok, "OptSeq(8)=" + fmt("%.3fs", a) + " OptSeqDP(15)=" +
                  fmt("%.3fs", b) + " OptSeqDP(20)=" + fmt("%.3fs", c) +
                  " SubOptDP(100)=" + fmt("%.3fs", d)};
}

// 6
Outcome one_shot_dominance() {
  struct Robot {
    const char* name;
    RobotSpec spec;
  };
  RobotSpec tele;
  tele.kind = RobotKind::kTelescoping;
  tele.v_e = 15.0;
  RobotSpec scara;
  scara.kind = RobotKind::kScara;
  scara.speed_scale = 2.0;
  const PolicyKind greedy[] = {PolicyKind::kFifo, PolicyKind::kSpt,
                               PolicyKind::kEuclidean};
  bool ok = true;
  std::string detail;
  for (const Robot& r : {Robot{"telescoping", tele}, Robot{"scara", scara}}) {
    ScenarioConfig cfg;
    cfg.robot = r.spec;
    cfg.n_objects = 10;
    auto model = build_model(cfg.workspace, cfg.robot);
    int violations = 0;
    int misses = 0;
    double ratio[3] = {0.0, 0.0, 0.0};
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      cfg.seed = seed;
      auto objs = spawn_objects(cfg);
      cfg.policy.kind = PolicyKind::kSubOptDp;
      SimMetrics sub = run_one_shot(cfg, *model, objs);
      misses += sub.missed;
      for (int g = 0; g < 3; ++g) {
        cfg.policy.kind = greedy[g];
        SimMetrics m = run_one_shot(cfg, *model, objs);
        misses += m.missed;
        if (m.total_time < sub.total_time - 1e-9) ++violations;
        ratio[g] += m.total_time / sub.total_time / 100.0;
      }
    }
    const double best = *std::max_element(ratio, ratio + 3);
    if (violations > 0 || misses > 0 || best < 1.03) ok = false;
    detail += std::string(r.name) + ": violations=" +
              std::to_string(violations) + " misses=" + std::to_string(misses) +
              " ratios fifo/spt/euclid=" + fmt("%.3f", ratio[0]) + "/" +
              fmt("%.3f", ratio[1]) + "/" + fmt("%.3f", ratio[2]) + "; ";
  }
  return {ok, detail};
}

// Mean picked ratio per (setting, policy) over the matrix runs.
std::map<std::string, std::map<std::string, double>> ratios(
    const ExperimentMatrix& m, bool* all_ok) {
  auto results = run_matrix(m, 1);
  std::map<std::string, std::map<std::string, double>> out;
  for (const RunResult& r : results) {
    if (!r.ok()) {
      *all_ok = false;
      continue;
    }
    std::string setting = r.settings.front().second;
    out[setting][std::string(to_string(r.config.policy.kind))] +=
        r.metrics->picked_ratio / m.repetitions;
  }
  return out;
}

// 7
Outcome continuous_ordering() {
  auto t0 = Clock::now();
  ExperimentMatrix m = parse_matrix(R"({
    "robot": {"kind": "scara"},
    "arrival": {"kind": "poisson", "lambda": 1},
    "n_objects": 2000,
    "seed": 1,
    "matrix": {"sweeps": {
      "arrival.lambda": [0.3, 0.5, 0.7, 0.9, 1.1, 1.3],
      "policy.kind": ["fifo", "spt", "euclidean", "sub_opt_dp"]}}
  })");
  bool runs_ok = true;
  auto r = ratios(m, &runs_ok);
  const auto& low = r.at("0.3");
  const auto& high = r.at("1.3");
  bool a = true;
  for (const auto& [policy, v] : low) a = a && v >= 0.99;
  const double sub = high.at("sub_opt_dp");
  const double spt = high.at("spt");
  const double fifo = high.at("fifo");
  bool b = sub >= spt + 0.05 && sub >= fifo + 0.20;
  bool c = true;
  for (const auto& [policy, v] : high) {
    if (policy != "fifo") c = c && fifo < v;
  }
  const double secs = seconds_since(t0);
  std::string detail = "lambda=0.3 min=" +
                       fmt("%.4f", std::min_element(low.begin(), low.end(),
                                                    [](auto& x, auto& y) {
                                                      return x.second < y.second;
                                                    })->second) +
                       "; lambda=1.3 sub=" + fmt("%.4f", sub) + " spt=" +
                       fmt("%.4f", spt) + " euclid=" +
                       fmt("%.4f", high.at("euclidean")) + " fifo=" +
                       fmt("%.4f", fifo) + " t=" + fmt("%.1fs", secs);
  return {runs_ok && a && b && c && secs < 600.0, detail};
}

// 8
Outcome uniform_square_trend() {
  ExperimentMatrix m = parse_matrix(R"({
    "robot": {"kind": "scara"},
    "arrival": {"kind": "uniform_square", "length_scale": 2000},
    "n_objects": 2000,
    "seed": 1,
    "matrix": {"repetitions": 3, "sweeps": {
      "arrival.length_scale": [1000, 1400, 1800, 2200, 2600],
      "policy.kind": ["fifo", "spt", "euclidean", "sub_opt_dp"]}}
  })");
  bool ok = true;
  auto r = ratios(m, &ok);
  const char* scales[] = {"1000", "1400", "1800", "2200", "2600"};
  std::string detail;
  for (const char* policy : {"fifo", "spt", "euclidean", "sub_opt_dp"}) {
    detail += std::string(policy) + ":";
    double prev = -1.0;
    for (const char* s : scales) {
      const double v = r.at(s).at(policy);
      if (v < prev) ok = false;
      prev = v;
      detail += " " + fmt("%.3f", v);
    }
    detail += "; ";
  }
  return {ok, detail};
}

// 9
Outcome order_distribution() {
  OrderStudyParams p;
  auto recs = order_distribution_study(p);
  const double first = mean_x_at_rank(recs, 0);
  const double last = mean_x_at_rank(recs, 9);
  return {recs.size() == 1000 && first < last,
          "mean x rank0=" + fmt("%.3f", first) + " rank9=" + fmt("%.3f", last)};
}

// 10
Outcome invariants() {
  std::vector<std::string> failed;
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Workspace ws = Workspace::standard();

  // advection is linear in time
  bool adv = true;
  for (int i = 0; i < 1000; ++i) {
    ConveyorObject o{i, {5.0, 5.0 * u(rng)}, 10.0 * u(rng)};
    const double a = 3.0 * u(rng);
    const double b = 3.0 * u(rng);
    Point2 p = position_at(o, o.spawn_time + a + b);
    Point2 q = position_at(o, o.spawn_time + a);
    if (std::abs((q.x - p.x) - b) > 1e-9 || p.y != o.spawn_pos.y) adv = false;
  }
  if (!adv) failed.push_back("advection");

  // FK of IK
  ScaraArm arm;
  arm.link1 = 1.2;
  arm.link2 = 0.8;
  double fk = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double r = 0.4 + 1.6 * u(rng);
    const double phi = 6.283185307179586 * u(rng);
    Point2 t{r * std::cos(phi), r * std::sin(phi)};
    fk = std::max(fk, distance(scara_fk(arm, scara_ik(arm, t)), t));
  }
  if (fk > 1e-9) failed.push_back("fk-ik");

  // interception fixed point
  auto reach = std::make_shared<ScaraReach>(ScaraArm::standard_for(ws));
  DirectModel direct(reach, ws);
  double residual = 0.0;
  for (int i = 0; i < 200; ++i) {
    Point2 p{-3.0 + 8.0 * u(rng), 5.0 * u(rng)};
    PnpOutcome out = get_pnp_time(direct, p);
    if (!out.is_hit()) continue;
    auto r = reach->reach(out.hit().pick_point);
    residual = std::max(residual, std::abs(r->go - out.hit().intercept_time));
  }
  if (residual > 1e-6) failed.push_back("fixed-point");

  // table against direct, away from the drop-off kink
  auto table = std::make_shared<PnpTimeTable>(build_pnp_table(*reach, ws));
  TableModel tab(table);
  double table_err = 0.0;
  for (int n = 0; n < 1000;) {
    Point2 p{-3.0 + 8.0 * u(rng), 5.0 * u(rng)};
    PnpOutcome a = get_pnp_time(tab, p);
    PnpOutcome b = get_pnp_time(direct, p);
    if (!a.is_hit() || !b.is_hit()) continue;
    Point2 pick = b.hit().pick_point;
    if (std::hypot(pick.x, pick.y) < 2.5) continue;
    ++n;
    table_err = std::max(table_err, std::abs(a.hit().total_time /
                                                  b.hit().total_time -
                                              1.0));
  }
  if (table_err > 0.01) failed.push_back("table");

  // plan validity and per-splice improvement
  TelescopingModel tele({{0.0, 0.0}, 3.0}, ws);
  Rng prng(10, Stream::kStudy);
  bool perms = true;
  bool splices = true;
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + i % 18;
    PlanningSnapshot snap(random_batch(prng, n, 0.0, 5.0, 5.0), tele);
    PlanStats st;
    PickPlan p = sub_opt_dp(snap, {std::nullopt, 6, GreedyPolicy::kFifo}, &st);
    std::vector<int> ids = p.order;
    std::sort(ids.begin(), ids.end());
    for (int k = 0; k < n; ++k) perms = perms && ids[static_cast<std::size_t>(k)] == k;
    perms = perms && validate_plan(p).empty();
    for (const SpliceRecord& r : st.splices) {
      if (r.accepted && !r.after.better_than(r.before)) splices = false;
    }
    PickPlan fifo = evaluate_sequence(snap, greedy_order(snap, GreedyPolicy::kFifo));
    if (PlanKey::of(fifo).better_than(PlanKey::of(p))) splices = false;
  }
  if (!perms) failed.push_back("permutation");
  if (!splices) failed.push_back("splice");

  // determinism
  ScenarioConfig cfg;
  cfg.robot.kind = RobotKind::kScara;
  cfg.arrival = PoissonArrivals{1.0};
  cfg.n_objects = 300;
  cfg.seed = 42;
  if (!(run_scenario(cfg) == run_scenario(cfg))) failed.push_back("determinism");

  std::string detail = "fk=" + fmt("%.1e", fk) + " residual=" +
                       fmt("%.1e", residual) + " table=" +
                       fmt("%.3f%%", 100.0 * table_err);
  for (const auto& f : failed) detail += " FAILED:" + f;
  return {failed.empty(), detail};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"root of f", root_via_cli},
      {"two-object magnitudes", two_object_magnitudes},
      {"dp equals brute force", dp_equals_brute_force},
      {"suboptdp near-optimal", subopt_gap},
      {"planner scaling", scaling},
      {"one-shot dominance", one_shot_dominance},
      {"continuous ordering", continuous_ordering},
      {"uniform-square trend", uniform_square_trend},
      {"order distribution", order_distribution},
      {"invariants", invariants},
  };
  int failures = 0;
  int idx = 0;
  for (const Criterion& c : criteria) {
    ++idx;
    Outcome o;
    auto t0 = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %-24s %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", idx,
                c.name, o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
