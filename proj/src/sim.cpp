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

#include "pnpseq/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pnpseq/rng.hpp"
#include "pnpseq/text.hpp"

namespace pnpseq {

namespace {

struct NamedPolicy {
  PolicyKind kind;
  std::string_view name;
};

constexpr NamedPolicy kPolicyNames[] = {
    {PolicyKind::kFifo, "fifo"},         {PolicyKind::kSpt, "spt"},
    {PolicyKind::kEuclidean, "euclidean"}, {PolicyKind::kOptSeq, "opt_seq"},
    {PolicyKind::kOptSeqDp, "opt_seq_dp"}, {PolicyKind::kSubOptDp, "sub_opt_dp"},
};

std::optional<GreedyPolicy> as_greedy(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kFifo:
      return GreedyPolicy::kFifo;
    case PolicyKind::kSpt:
      return GreedyPolicy::kSpt;
    case PolicyKind::kEuclidean:
      return GreedyPolicy::kEuclidean;
    default:
      return std::nullopt;
  }
}

std::vector<ConveyorObject> number_by_arrival(
    std::vector<ConveyorObject> objs) {
  std::stable_sort(objs.begin(), objs.end(),
                   [](const ConveyorObject& a, const ConveyorObject& b) {
                     return a.spawn_time < b.spawn_time;
                   });
  for (std::size_t i = 0; i < objs.size(); ++i) objs[i].id = static_cast<int>(i);
  return objs;
}

void finish(SimMetrics& m) {
  m.picked_ratio = m.total_objects == 0
                       ? 1.0
                       : static_cast<double>(m.picked) / m.total_objects;
}

}  // namespace

std::string_view to_string(RobotKind kind) {
  switch (kind) {
    case RobotKind::kTelescoping:
      return "telescoping";
    case RobotKind::kScara:
      return "scara";
    case RobotKind::kTable:
      return "table";
  }
  return "?";
}

RobotKind parse_robot_kind(std::string_view text) {
  if (text == "telescoping") return RobotKind::kTelescoping;
  if (text == "scara") return RobotKind::kScara;
  if (text == "table") return RobotKind::kTable;
  throw ConfigError("unknown robot '" + std::string(text) + "'");
}

std::string_view to_string(PolicyKind kind) {
  for (const auto& p : kPolicyNames) {
    if (p.kind == kind) return p.name;
  }
  return "?";
}

PolicyKind parse_policy_kind(std::string_view text) {
  for (const auto& p : kPolicyNames) {
    if (p.name == text) return p.kind;
  }
  throw ConfigError("unknown policy '" + std::string(text) + "'");
}

std::size_t default_horizon(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kOptSeq:
      return 8;
    case PolicyKind::kOptSeqDp:
      return 20;
    default:
      return 0;
  }
}

void ScenarioConfig::validate() const {
  if (n_objects < 1) throw ConfigError("n_objects must be at least 1");
  if (robot.kind == RobotKind::kTelescoping) {
    TelescopingArm{workspace.robot_base(), robot.v_e}.validate();
  }
  if (!(robot.speed_scale > 0.0) || !std::isfinite(robot.speed_scale)) {
    throw ConfigError("speed_scale must be positive");
  }
  if (robot.kind == RobotKind::kTable && robot.table_path.empty()) {
    throw ConfigError("table robot needs a table file");
  }
  if (policy.subopt.window < 2) throw ConfigError("window must be at least 2");
  if (const auto* box = std::get_if<OneShotBox>(&arrival)) {
    if (!(box->x_min <= box->x_max) || box->x_max > workspace.x_right() ||
        box->x_min < workspace.x_left()) {
      throw ConfigError("one-shot spawn band must lie inside the workspace");
    }
    if (policy.kind == PolicyKind::kOptSeq &&
        static_cast<std::size_t>(n_objects) > kOptSeqMaxObjects) {
      throw GuardLimit("opt_seq one-shot runs are limited to " +
                       std::to_string(kOptSeqMaxObjects) + " objects");
    }
    if (policy.kind == PolicyKind::kOptSeqDp &&
        static_cast<std::size_t>(n_objects) > kOptSeqDpMaxObjects) {
      throw GuardLimit("opt_seq_dp one-shot runs are limited to " +
                       std::to_string(kOptSeqDpMaxObjects) + " objects");
    }
  } else if (const auto* p = std::get_if<PoissonArrivals>(&arrival)) {
    if (!(p->lambda > 0.0) || !std::isfinite(p->lambda)) {
      throw ConfigError("lambda must be positive");
    }
  } else if (const auto* u = std::get_if<UniformSquare>(&arrival)) {
    if (!(u->length_scale > 0.0) || !std::isfinite(u->length_scale)) {
      throw ConfigError("length_scale must be positive");
    }
  }
  std::size_t h = policy.horizon;
  if (continuous() && h != 0) {
    if (policy.kind == PolicyKind::kOptSeq && h > kOptSeqMaxObjects) {
      throw GuardLimit("opt_seq horizon too large");
    }
    if (policy.kind == PolicyKind::kOptSeqDp && h > kOptSeqDpMaxObjects) {
      throw GuardLimit("opt_seq_dp horizon too large");
    }
  }
}

ScaraArm scara_arm_for(const Workspace& ws, const RobotSpec& spec) {
  ScaraArm arm = spec.scara.value_or(ScaraArm::standard_for(ws));
  for (JointProfile& j : arm.joints) {
    j.v_max *= spec.speed_scale;
    j.a_max *= spec.speed_scale * spec.speed_scale;
  }
  arm.validate();
  return arm;
}

std::shared_ptr<const PnpModel> build_model(const Workspace& ws,
                                            const RobotSpec& spec) {
  switch (spec.kind) {
    case RobotKind::kTelescoping:
      return std::make_shared<TelescopingModel>(
          TelescopingArm{ws.robot_base(), spec.v_e}, ws);
    case RobotKind::kScara: {
      ScaraReach reach(scara_arm_for(ws, spec));
      if (spec.tabulate) {
        auto table = std::make_shared<const PnpTimeTable>(
            build_pnp_table(reach, ws, spec.table_resolution));
        return std::make_shared<TableModel>(table);
      }
      return std::make_shared<DirectModel>(
          std::make_shared<ScaraReach>(reach), ws);
    }
    case RobotKind::kTable: {
      auto table = std::make_shared<const PnpTimeTable>(
          load_pnp_table(spec.table_path));
      if (!(table->workspace() == ws)) {
        throw ConfigError("table workspace does not match the scenario");
      }
      return std::make_shared<TableModel>(table);
    }
  }
  throw ConfigError("unknown robot kind");
}

std::vector<ConveyorObject> spawn_one_shot(const ScenarioConfig& cfg) {
  const auto& box = std::get<OneShotBox>(cfg.arrival);
  Rng rng(cfg.seed, Stream::kSpawn);
  std::vector<ConveyorObject> objs;
  objs.reserve(static_cast<std::size_t>(cfg.n_objects));
  for (int i = 0; i < cfg.n_objects; ++i) {
    double x = rng.uniform(box.x_min, box.x_max);
    double y = rng.uniform(0.0, cfg.workspace.y_top());
    objs.push_back({i, {x, y}, 0.0});
  }
  return objs;
}

std::vector<ConveyorObject> spawn_poisson(const ScenarioConfig& cfg) {
  const auto& p = std::get<PoissonArrivals>(cfg.arrival);
  Rng rng(cfg.seed, Stream::kSpawn);
  std::vector<ConveyorObject> objs;
  objs.reserve(static_cast<std::size_t>(cfg.n_objects));
  double t = 0.0;
  for (int i = 0; i < cfg.n_objects; ++i) {
    double y = rng.uniform(0.0, cfg.workspace.y_top());
    objs.push_back({i, {cfg.workspace.x_right(), y}, t});
    t += rng.exponential(p.lambda);
  }
  return objs;
}

std::vector<ConveyorObject> spawn_uniform_square(const ScenarioConfig& cfg) {
  const auto& u = std::get<UniformSquare>(cfg.arrival);
  Rng rng(cfg.seed, Stream::kSpawn);
  std::vector<ConveyorObject> objs;
  objs.reserve(static_cast<std::size_t>(cfg.n_objects));
  for (int i = 0; i < cfg.n_objects; ++i) {
    double a = rng.uniform();
    double b = rng.uniform();
    objs.push_back(
        {i, {cfg.workspace.x_right(), b * cfg.workspace.y_top()},
         a * u.length_scale});
  }
  return number_by_arrival(std::move(objs));
}

std::vector<ConveyorObject> spawn_objects(const ScenarioConfig& cfg) {
  if (std::holds_alternative<OneShotBox>(cfg.arrival)) {
    return spawn_one_shot(cfg);
  }
  if (std::holds_alternative<PoissonArrivals>(cfg.arrival)) {
    return spawn_poisson(cfg);
  }
  return spawn_uniform_square(cfg);
}

PickPlan plan_with(const PlanningSnapshot& snap, const PolicySpec& policy,
                   PlanStats* stats) {
  if (auto g = as_greedy(policy.kind)) {
    std::vector<int> order = greedy_order(snap, *g, stats);
    return evaluate_sequence(snap, order, stats);
  }
  switch (policy.kind) {
    case PolicyKind::kOptSeq:
      return opt_seq(snap, stats);
    case PolicyKind::kOptSeqDp:
      return opt_seq_dp(snap, stats);
    default:
      return sub_opt_dp(snap, policy.subopt, stats);
  }
}

SimMetrics run_one_shot(const ScenarioConfig& cfg) {
  cfg.validate();
  auto model = build_model(cfg.workspace, cfg.robot);
  return run_one_shot(cfg, *model, spawn_one_shot(cfg));
}

SimMetrics run_one_shot(const ScenarioConfig& cfg, const PnpModel& model,
                        std::span<const ConveyorObject> objects) {
  std::vector<SnapshotObject> snap_objs;
  for (const auto& o : objects) snap_objs.push_back({o.id, position_at(o, 0.0)});
  PlanningSnapshot snap(std::move(snap_objs), model);

  SimMetrics m;
  m.total_objects = static_cast<int>(objects.size());
  PickPlan plan = plan_with(snap, cfg.policy);
  m.decisions = 1;
  m.mean_pickable = static_cast<double>(snap.size());
  double t = 0.0;
  for (int id : plan.order) {
    const SnapshotObject& o = snap.objects()[*snap.index_of(id)];
    PnpOutcome out = get_pnp_time(model, {o.pos.x - t, o.pos.y});
    if (!out.is_hit()) {
      ++m.missed;
      continue;
    }
    const Hit& h = out.hit();
    m.log.push_back({id, 0.0, t + h.intercept_time, h.pick_point});
    t += h.total_time;
    ++m.picked;
  }
  m.total_time = t;
  finish(m);
  return m;
}

SimMetrics run_continuous(const ScenarioConfig& cfg) {
  cfg.validate();
  auto model = build_model(cfg.workspace, cfg.robot);
  return run_continuous(cfg, *model, spawn_objects(cfg));
}

SimMetrics run_continuous(const ScenarioConfig& cfg, const PnpModel& model,
                          std::span<const ConveyorObject> objects) {
  SimMetrics m;
  m.total_objects = static_cast<int>(objects.size());
  const std::size_t horizon = cfg.policy.horizon != 0
                                  ? cfg.policy.horizon
                                  : default_horizon(cfg.policy.kind);

  std::vector<std::size_t> arrival(objects.size());
  std::iota(arrival.begin(), arrival.end(), std::size_t{0});
  std::stable_sort(arrival.begin(), arrival.end(),
                   [&](std::size_t a, std::size_t b) {
                     return objects[a].spawn_time < objects[b].spawn_time;
                   });

  std::vector<std::size_t> active;  // indices into objects
  std::vector<double> xs, ys, totals;
  std::vector<SnapshotObject> pickable;
  std::size_t next = 0;
  double now = 0.0;
  double pickable_sum = 0.0;
  while (next < arrival.size() || !active.empty()) {
    while (next < arrival.size() &&
           objects[arrival[next]].spawn_time <= now) {
      active.push_back(arrival[next++]);
    }
    if (active.empty()) {
      now = objects[arrival[next]].spawn_time;
      continue;
    }

    const std::size_t k = active.size();
    xs.resize(k);
    ys.resize(k);
    totals.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      Point2 p = position_at(objects[active[i]], now);
      xs[i] = p.x;
      ys[i] = p.y;
    }
    model.total_times(xs, ys, 0.0, totals);

    pickable.clear();
    std::size_t kept = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!std::isfinite(totals[i])) {
        ++m.missed;
        continue;
      }
      active[kept++] = active[i];
      pickable.push_back({objects[active[i]].id, {xs[i], ys[i]}});
    }
    active.resize(kept);
    if (pickable.empty()) continue;
    pickable_sum += static_cast<double>(pickable.size());

    if (horizon != 0 && pickable.size() > horizon) {
      std::stable_sort(pickable.begin(), pickable.end(),
                       [](const SnapshotObject& a, const SnapshotObject& b) {
                         return a.pos.x < b.pos.x;
                       });
      pickable.resize(horizon);
    }
    PlanningSnapshot snap(pickable, model);
    int chosen;
    if (auto g = as_greedy(cfg.policy.kind)) {
      chosen = greedy_select(snap, *g);
    } else {
      chosen = plan_with(snap, cfg.policy).order.front();
    }
    ++m.decisions;

    const SnapshotObject& c = snap.objects()[*snap.index_of(chosen)];
    PnpOutcome out = get_pnp_time(model, c.pos);
    const Hit& h = out.hit();
    m.log.push_back({chosen, now, now + h.intercept_time, h.pick_point});
    now += h.total_time;
    ++m.picked;
    auto it = std::find_if(active.begin(), active.end(), [&](std::size_t i) {
      return objects[i].id == chosen;
    });
    active.erase(it);
  }
  m.total_time = m.log.empty() ? 0.0 : now;
  if (m.decisions > 0) m.mean_pickable = pickable_sum / m.decisions;
  finish(m);
  return m;
}

SimMetrics run_scenario(const ScenarioConfig& cfg) {
  return cfg.continuous() ? run_continuous(cfg) : run_one_shot(cfg);
}

void write_pick_log_csv(std::ostream& out, std::span<const PickLogEntry> log) {
  out << "object_id,decision_time,pick_time,pick_x,pick_y\n";
  for (const auto& e : log) {
    write_csv_row(out, {std::to_string(e.object_id),
                        format_double(e.decision_time),
                        format_double(e.pick_time),
                        format_double(e.pick_point.x),
                        format_double(e.pick_point.y)});
  }
}

}  // namespace pnpseq
