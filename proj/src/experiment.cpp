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

#include "pnpseq/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "pnpseq/text.hpp"

namespace pnpseq {

namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON helpers
// ---------------------------------------------------------------------------

void check_keys(const Json& obj, std::string_view where,
                std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) {
    throw ConfigError(std::string(where) + " must be an object");
  }
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("unknown key '" + key + "' in " + std::string(where));
    }
  }
}

double get_double(const Json& obj, std::string_view key, double fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number()) {
    throw ConfigError("'" + std::string(key) + "' must be a number");
  }
  return it->get<double>();
}

std::int64_t get_int(const Json& obj, std::string_view key,
                     std::int64_t fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) {
    throw ConfigError("'" + std::string(key) + "' must be an integer");
  }
  return it->get<std::int64_t>();
}

std::string get_string(const Json& obj, std::string_view key,
                       std::string fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_string()) {
    throw ConfigError("'" + std::string(key) + "' must be a string");
  }
  return it->get<std::string>();
}

bool get_bool(const Json& obj, std::string_view key, bool fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) {
    throw ConfigError("'" + std::string(key) + "' must be true or false");
  }
  return it->get<bool>();
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end(), nullptr, true, true);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

GreedyPolicy parse_greedy(std::string_view s) {
  if (s == "fifo") return GreedyPolicy::kFifo;
  if (s == "spt") return GreedyPolicy::kSpt;
  if (s == "euclidean") return GreedyPolicy::kEuclidean;
  throw ConfigError("unknown greedy policy '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Scenario <-> JSON
// ---------------------------------------------------------------------------

Workspace workspace_from(const Json& j) {
  check_keys(j, "workspace", {"x_left", "x_right", "y_top", "base_x"});
  Workspace d = Workspace::standard();
  try {
    return Workspace(get_double(j, "x_left", d.x_left()),
                     get_double(j, "x_right", d.x_right()),
                     get_double(j, "y_top", d.y_top()),
                     get_double(j, "base_x", d.robot_base().x));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

ScaraArm scara_from(const Json& j) {
  check_keys(j, "robot.scara", {"base_x", "link1", "link2", "elbow", "joints"});
  ScaraArm a;
  a.base = {get_double(j, "base_x", 0.0), 0.0};
  a.link1 = get_double(j, "link1", a.link1);
  a.link2 = get_double(j, "link2", a.link2);
  std::string elbow = get_string(j, "elbow", "up");
  if (elbow == "up") {
    a.elbow = Elbow::kUp;
  } else if (elbow == "down") {
    a.elbow = Elbow::kDown;
  } else {
    throw ConfigError("elbow must be \"up\" or \"down\"");
  }
  if (auto it = j.find("joints"); it != j.end()) {
    if (!it->is_array() || it->size() != 2) {
      throw ConfigError("robot.scara.joints must list two joints");
    }
    for (std::size_t i = 0; i < 2; ++i) {
      const Json& jj = (*it)[i];
      check_keys(jj, "robot.scara.joints[]", {"v_max", "a_max"});
      a.joints[i].v_max = get_double(jj, "v_max", a.joints[i].v_max);
      a.joints[i].a_max = get_double(jj, "a_max", a.joints[i].a_max);
    }
  }
  a.validate();
  return a;
}

Json scara_to(const ScaraArm& a) {
  Json j;
  j["base_x"] = a.base.x;
  j["link1"] = a.link1;
  j["link2"] = a.link2;
  j["elbow"] = a.elbow == Elbow::kUp ? "up" : "down";
  Json joints = Json::array();
  for (const JointProfile& p : a.joints) {
    Json jp;
    jp["v_max"] = p.v_max;
    jp["a_max"] = p.a_max;
    joints.push_back(jp);
  }
  j["joints"] = joints;
  return j;
}

RobotSpec robot_from(const Json& j) {
  check_keys(j, "robot",
             {"kind", "v_e", "speed_scale", "tabulate", "table_rows",
              "table_cols", "table_path", "scara"});
  RobotSpec r;
  r.kind = parse_robot_kind(get_string(j, "kind", "telescoping"));
  r.v_e = get_double(j, "v_e", r.v_e);
  r.speed_scale = get_double(j, "speed_scale", r.speed_scale);
  r.tabulate = get_bool(j, "tabulate", r.tabulate);
  r.table_resolution.rows =
      static_cast<int>(get_int(j, "table_rows", r.table_resolution.rows));
  r.table_resolution.cols =
      static_cast<int>(get_int(j, "table_cols", r.table_resolution.cols));
  r.table_path = get_string(j, "table_path", "");
  if (auto it = j.find("scara"); it != j.end() && !it->is_null()) {
    r.scara = scara_from(*it);
  }
  return r;
}

Json robot_to(const RobotSpec& r) {
  Json j;
  j["kind"] = std::string(to_string(r.kind));
  j["v_e"] = r.v_e;
  j["speed_scale"] = r.speed_scale;
  j["tabulate"] = r.tabulate;
  j["table_rows"] = r.table_resolution.rows;
  j["table_cols"] = r.table_resolution.cols;
  j["table_path"] = r.table_path;
  j["scara"] = r.scara ? scara_to(*r.scara) : Json(nullptr);
  return j;
}

PolicySpec policy_from(const Json& j) {
  check_keys(j, "policy", {"kind", "sweeps", "window", "init", "horizon"});
  PolicySpec p;
  p.kind = parse_policy_kind(get_string(j, "kind", "sub_opt_dp"));
  if (auto it = j.find("sweeps"); it != j.end() && !it->is_null()) {
    if (!it->is_number_integer() || it->get<std::int64_t>() < 0) {
      throw ConfigError("policy.sweeps must be a non-negative integer");
    }
    p.subopt.sweeps = it->get<std::size_t>();
  }
  std::int64_t window = get_int(j, "window", 9);
  std::int64_t horizon = get_int(j, "horizon", 0);
  if (window < 0 || horizon < 0) {
    throw ConfigError("policy.window and policy.horizon must be >= 0");
  }
  p.subopt.window = static_cast<std::size_t>(window);
  p.subopt.init = parse_greedy(get_string(j, "init", "fifo"));
  p.horizon = static_cast<std::size_t>(horizon);
  return p;
}

Json policy_to(const PolicySpec& p) {
  Json j;
  j["kind"] = std::string(to_string(p.kind));
  j["sweeps"] = p.subopt.sweeps ? Json(*p.subopt.sweeps) : Json(nullptr);
  j["window"] = p.subopt.window;
  j["init"] = std::string(to_string(p.subopt.init));
  j["horizon"] = p.horizon;
  return j;
}

ArrivalSpec arrival_from(const Json& j) {
  if (!j.is_object()) throw ConfigError("arrival must be an object");
  std::string kind = get_string(j, "kind", "one_shot");
  if (kind == "one_shot") {
    check_keys(j, "arrival", {"kind", "x_min", "x_max"});
    OneShotBox b;
    b.x_min = get_double(j, "x_min", b.x_min);
    b.x_max = get_double(j, "x_max", b.x_max);
    return b;
  }
  if (kind == "poisson") {
    check_keys(j, "arrival", {"kind", "lambda"});
    return PoissonArrivals{get_double(j, "lambda", 1.0)};
  }
  if (kind == "uniform_square") {
    check_keys(j, "arrival", {"kind", "length_scale"});
    return UniformSquare{get_double(j, "length_scale", 100.0)};
  }
  throw ConfigError("unknown arrival kind '" + kind + "'");
}

Json arrival_to(const ArrivalSpec& a) {
  Json j;
  if (const auto* b = std::get_if<OneShotBox>(&a)) {
    j["kind"] = "one_shot";
    j["x_min"] = b->x_min;
    j["x_max"] = b->x_max;
  } else if (const auto* p = std::get_if<PoissonArrivals>(&a)) {
    j["kind"] = "poisson";
    j["lambda"] = p->lambda;
  } else {
    j["kind"] = "uniform_square";
    j["length_scale"] = std::get<UniformSquare>(a).length_scale;
  }
  return j;
}

const std::initializer_list<std::string_view> kScenarioKeys = {
    "workspace", "robot", "policy", "arrival", "n_objects", "seed"};

// Guard limits are skipped when `guards` is false; matrix cells that break
// them fail at run time instead.
ScenarioConfig scenario_from(const Json& j, bool guards = true) {
  ScenarioConfig c;
  if (auto it = j.find("workspace"); it != j.end()) {
    c.workspace = workspace_from(*it);
  }
  if (auto it = j.find("robot"); it != j.end()) c.robot = robot_from(*it);
  if (auto it = j.find("policy"); it != j.end()) c.policy = policy_from(*it);
  if (auto it = j.find("arrival"); it != j.end()) {
    c.arrival = arrival_from(*it);
  }
  std::int64_t n = get_int(j, "n_objects", c.n_objects);
  if (n < 1 || n > 100000000) throw ConfigError("n_objects out of range");
  c.n_objects = static_cast<int>(n);
  auto seed = j.find("seed");
  if (seed != j.end()) {
    if (!seed->is_number_unsigned()) {
      throw ConfigError("seed must be a non-negative integer");
    }
    c.seed = seed->get<std::uint64_t>();
  }
  try {
    c.validate();
  } catch (const GuardLimit&) {
    if (guards) throw;
  }
  return c;
}

Json scenario_to(const ScenarioConfig& c) {
  Json j;
  Json ws;
  ws["x_left"] = c.workspace.x_left();
  ws["x_right"] = c.workspace.x_right();
  ws["y_top"] = c.workspace.y_top();
  ws["base_x"] = c.workspace.robot_base().x;
  j["workspace"] = ws;
  j["robot"] = robot_to(c.robot);
  j["policy"] = policy_to(c.policy);
  j["arrival"] = arrival_to(c.arrival);
  j["n_objects"] = c.n_objects;
  j["seed"] = c.seed;
  return j;
}

std::string fnv1a_hex(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string csv_safe(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

}  // namespace

ScenarioConfig parse_scenario(std::string_view text) {
  Json j = parse_json(text);
  check_keys(j, "scenario", kScenarioKeys);
  return scenario_from(j);
}

std::string dump_scenario(const ScenarioConfig& cfg) {
  return scenario_to(cfg).dump(2) + "\n";
}

std::string config_hash(const ScenarioConfig& cfg) {
  ScenarioConfig c = cfg;
  c.seed = 0;
  return fnv1a_hex(scenario_to(c).dump());
}

std::size_t ExperimentMatrix::cell_count() const {
  std::size_t n = 1;
  for (const Sweep& s : sweeps) n *= s.values.size();
  return n;
}

ExperimentMatrix parse_matrix(std::string_view text) {
  Json j = parse_json(text);
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentMatrix m;
  Json scenario = j;
  scenario.erase("matrix");
  check_keys(scenario, "scenario", kScenarioKeys);
  m.base = scenario_from(scenario, false);
  m.seed_base = m.base.seed;
  auto mit = j.find("matrix");
  if (mit == j.end()) return m;
  const Json& mj = *mit;
  check_keys(mj, "matrix", {"repetitions", "seed_base", "sweeps"});
  std::int64_t reps = get_int(mj, "repetitions", 1);
  if (reps < 1) throw ConfigError("matrix.repetitions must be at least 1");
  m.repetitions = static_cast<int>(reps);
  if (auto it = mj.find("seed_base"); it != mj.end()) {
    if (!it->is_number_unsigned()) {
      throw ConfigError("matrix.seed_base must be a non-negative integer");
    }
    m.seed_base = it->get<std::uint64_t>();
  }
  if (auto it = mj.find("sweeps"); it != mj.end()) {
    if (!it->is_object()) throw ConfigError("matrix.sweeps must be an object");
    for (const auto& [path, values] : it->items()) {
      if (!values.is_array() || values.empty()) {
        throw ConfigError("sweep '" + path + "' needs a non-empty list");
      }
      Sweep s{path, {}};
      for (const Json& v : values) s.values.push_back(v.dump());
      // fail early on bad paths and values
      for (const std::string& v : s.values) {
        try {
          apply_override(m.base, path, v);
        } catch (const GuardLimit&) {
        }
      }
      m.sweeps.push_back(std::move(s));
    }
  }
  return m;
}

std::string dump_matrix(const ExperimentMatrix& m) {
  Json j = scenario_to(m.base);
  Json mj;
  mj["repetitions"] = m.repetitions;
  mj["seed_base"] = m.seed_base;
  Json sweeps = Json::object();
  for (const Sweep& s : m.sweeps) {
    Json values = Json::array();
    for (const std::string& v : s.values) values.push_back(parse_json(v));
    sweeps[s.path] = values;
  }
  mj["sweeps"] = sweeps;
  j["matrix"] = mj;
  return j.dump(2) + "\n";
}

ExperimentMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

ScenarioConfig apply_override(const ScenarioConfig& cfg, std::string_view path,
                              std::string_view json_value) {
  Json j = scenario_to(cfg);
  Json* node = &j;
  std::string_view rest = path;
  while (true) {
    std::size_t dot = rest.find('.');
    std::string key(rest.substr(0, dot));
    if (!node->is_object() || !node->contains(key)) {
      throw ConfigError("sweep path '" + std::string(path) +
                        "' does not name a scenario field");
    }
    node = &(*node)[key];
    if (dot == std::string_view::npos) break;
    rest = rest.substr(dot + 1);
  }
  *node = parse_json(json_value);
  return scenario_from(j);
}

std::vector<RunResult> run_matrix(const ExperimentMatrix& m, int jobs) {
  const std::size_t cells = m.cell_count();
  const auto reps = static_cast<std::size_t>(m.repetitions);

  struct Cell {
    std::vector<std::pair<std::string, std::string>> settings;
    std::optional<ScenarioConfig> config;
    std::shared_ptr<const PnpModel> model;
    std::string error;
  };
  std::vector<Cell> cell_info(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    Cell& cell = cell_info[c];
    try {
      ScenarioConfig cfg = m.base;
      std::size_t idx = c;
      std::vector<std::pair<std::string, std::string>> settings;
      for (std::size_t s = m.sweeps.size(); s-- > 0;) {
        const Sweep& sw = m.sweeps[s];
        settings.emplace_back(sw.path, sw.values[idx % sw.values.size()]);
        idx /= sw.values.size();
      }
      std::reverse(settings.begin(), settings.end());
      cell.settings = settings;
      for (const auto& [path, value] : settings) {
        cfg = apply_override(cfg, path, value);
      }
      cfg.validate();
      cell.model = build_model(cfg.workspace, cfg.robot);
      cell.config = cfg;
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
  }

  std::vector<RunResult> results(cells * reps);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < results.size(); k = next++) {
      const std::size_t c = k / reps;
      const Cell& cell = cell_info[c];
      RunResult& r = results[k];
      r.cell = c;
      r.replicate = static_cast<int>(k % reps);
      r.settings = cell.settings;
      if (!cell.config) {
        r.config = m.base;
        r.error = cell.error;
        continue;
      }
      r.config = *cell.config;
      r.config.seed = m.seed_base + static_cast<std::uint64_t>(r.replicate);
      r.hash = config_hash(r.config);
      try {
        std::vector<ConveyorObject> objs = spawn_objects(r.config);
        r.metrics = r.config.continuous()
                        ? run_continuous(r.config, *cell.model, objs)
                        : run_one_shot(r.config, *cell.model, objs);
      } catch (const std::exception& e) {
        r.error = e.what();
      }
    }
  };
  const int n_threads =
      std::max(1, std::min(jobs, static_cast<int>(results.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

void write_metrics_csv(std::ostream& out, std::span<const RunResult> results) {
  out << "config_hash,policy,seed,picked,missed,picked_ratio,total_time,"
         "mean_pickable,status";
  if (!results.empty()) {
    for (const auto& [path, _] : results.front().settings) out << ',' << path;
  }
  out << '\n';
  for (const RunResult& r : results) {
    out << r.hash << ',' << to_string(r.config.policy.kind) << ','
        << r.config.seed << ',';
    if (r.ok()) {
      const SimMetrics& m = *r.metrics;
      out << m.picked << ',' << m.missed << ','
          << format_double(m.picked_ratio) << ','
          << format_double(m.total_time) << ','
          << format_double(m.mean_pickable) << ",ok";
    } else {
      out << ",,,,," << csv_safe("error: " + r.error);
    }
    for (const auto& [_, value] : r.settings) out << ',' << csv_safe(value);
    out << '\n';
  }
}

std::vector<SummaryRow> summarize(std::span<const RunResult> results) {
  struct Acc {
    int runs = 0;
    double total = 0.0;
    double ratio = 0.0;
    bool continuous = false;
    std::map<std::uint64_t, const SimMetrics*> by_seed;
  };
  std::map<std::string, std::map<std::string, Acc>> groups;
  std::vector<std::string> group_order;
  std::map<std::string, std::vector<std::string>> policy_order;
  for (const RunResult& r : results) {
    if (!r.ok()) continue;
    std::string group;
    for (const auto& [path, value] : r.settings) {
      if (path == "policy.kind") continue;
      if (!group.empty()) group += ' ';
      group += path + "=" + value;
    }
    if (group.empty()) group = "all";
    std::string policy(to_string(r.config.policy.kind));
    if (!groups.count(group)) group_order.push_back(group);
    auto& g = groups[group];
    if (!g.count(policy)) policy_order[group].push_back(policy);
    Acc& a = g[policy];
    ++a.runs;
    a.total += r.metrics->total_time;
    a.ratio += r.metrics->picked_ratio;
    a.continuous = r.config.continuous();
    a.by_seed[r.config.seed] = &*r.metrics;
  }

  std::vector<SummaryRow> rows;
  for (const std::string& group : group_order) {
    auto& g = groups[group];
    const Acc* sub = g.count("sub_opt_dp") ? &g["sub_opt_dp"] : nullptr;
    for (const std::string& policy : policy_order[group]) {
      const Acc& a = g[policy];
      SummaryRow row{group, policy, a.runs, a.total / a.runs, a.ratio / a.runs,
                     std::nullopt};
      if (sub != nullptr) {
        double acc = 0.0;
        int paired = 0;
        for (const auto& [seed, m] : a.by_seed) {
          auto it = sub->by_seed.find(seed);
          if (it == sub->by_seed.end()) continue;
          const SimMetrics& s = *it->second;
          if (a.continuous) {
            acc += m->picked_ratio - s.picked_ratio;
          } else if (s.total_time > 0.0) {
            acc += m->total_time / s.total_time;
          } else {
            acc += 1.0;
          }
          ++paired;
        }
        if (paired > 0) row.vs_subopt = acc / paired;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

void write_summary(std::ostream& out, std::span<const SummaryRow> rows) {
  char line[256];
  std::snprintf(line, sizeof line, "%-12s %6s %12s %12s %12s\n", "policy",
                "runs", "total_time", "picked", "vs_subopt");
  std::string last_group;
  for (const SummaryRow& r : rows) {
    if (r.group != last_group) {
      out << "[" << r.group << "]\n" << line;
      last_group = r.group;
    }
    char buf[256];
    std::string vs = "-";
    if (r.vs_subopt) {
      char tmp[32];
      std::snprintf(tmp, sizeof tmp, "%.6f", *r.vs_subopt);
      vs = tmp;
    }
    std::snprintf(buf, sizeof buf, "%-12s %6d %12.4f %12.4f %12s\n",
                  r.policy.c_str(), r.runs, r.mean_total_time,
                  r.mean_picked_ratio, vs.c_str());
    out << buf;
  }
}

std::vector<BenchRow> run_bench(const BenchParams& p) {
  if (p.n_min < 1 || p.n_max < p.n_min || p.n_step < 1 || p.repetitions < 1) {
    throw ConfigError("invalid bench range");
  }
  ScenarioConfig cfg = p.scenario;
  auto model = build_model(cfg.workspace, cfg.robot);
  std::vector<BenchRow> rows;
  using Clock = std::chrono::steady_clock;
  for (PolicyKind algo : p.algorithms) {
    std::size_t guard = algo == PolicyKind::kOptSeq     ? kOptSeqMaxObjects
                        : algo == PolicyKind::kOptSeqDp ? kOptSeqDpMaxObjects
                                                        : 1u << 30;
    for (int n = p.n_min; n <= p.n_max; n += p.n_step) {
      if (static_cast<std::size_t>(n) > guard) break;
      cfg.n_objects = n;
      cfg.policy.kind = algo;
      auto snapshot_for = [&](std::uint64_t seed) {
        cfg.seed = seed;
        std::vector<SnapshotObject> objs;
        for (const ConveyorObject& o : spawn_one_shot(cfg)) {
          objs.push_back({o.id, o.spawn_pos});
        }
        return PlanningSnapshot(std::move(objs), *model);
      };
      // warm-up on an instance that is not timed
      plan_with(snapshot_for(p.seed + 1000003), cfg.policy);
      BenchRow row{algo, n, p.repetitions, 0.0, kInfinity};
      for (int r = 0; r < p.repetitions; ++r) {
        PlanningSnapshot snap = snapshot_for(p.seed + static_cast<unsigned>(r));
        auto t0 = Clock::now();
        PickPlan plan = plan_with(snap, cfg.policy);
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        if (plan.order.size() != snap.size()) {
          throw std::logic_error("planner dropped objects");
        }
        row.mean_seconds += s;
        row.min_seconds = std::min(row.min_seconds, s);
      }
      row.mean_seconds /= p.repetitions;
      rows.push_back(row);
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "algorithm,n,repetitions,mean_seconds,min_seconds\n";
  for (const BenchRow& r : rows) {
    write_csv_row(out, {std::string(to_string(r.algorithm)),
                        std::to_string(r.n), std::to_string(r.repetitions),
                        format_double(r.mean_seconds),
                        format_double(r.min_seconds)});
  }
}

}  // namespace pnpseq
