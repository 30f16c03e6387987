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

#ifndef PNPSEQ_SIM_HPP_
#define PNPSEQ_SIM_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pnpseq/core.hpp"
#include "pnpseq/pnp_table.hpp"
#include "pnpseq/robot.hpp"
#include "pnpseq/sequencing.hpp"

namespace pnpseq {

// ---------------------------------------------------------------------------
// Scenario description
// ---------------------------------------------------------------------------

enum class RobotKind { kTelescoping, kScara, kTable };

std::string_view to_string(RobotKind kind);
RobotKind parse_robot_kind(std::string_view text);  // throws ConfigError

struct RobotSpec {
  RobotKind kind = RobotKind::kTelescoping;
  double v_e = 2.0;                // telescoping
  std::optional<ScaraArm> scara;   // unset: ScaraArm::standard_for(workspace)
  // Scara joint speed multiplier: v_max * s, a_max * s^2, so every move
  // takes 1/s of the time. Equivalent to slowing the belt by s.
  double speed_scale = 1.0;
  bool tabulate = true;            // scara: TableModel instead of DirectModel
  GridResolution table_resolution;
  std::string table_path;          // kTable
};

enum class PolicyKind { kFifo, kSpt, kEuclidean, kOptSeq, kOptSeqDp, kSubOptDp };

std::string_view to_string(PolicyKind kind);
PolicyKind parse_policy_kind(std::string_view text);  // throws ConfigError

struct PolicySpec {
  PolicyKind kind = PolicyKind::kSubOptDp;
  SubOptParams subopt;
  // Continuous mode: plan over at most this many pickable objects with the
  // smallest x. 0 picks the default for the policy.
  std::size_t horizon = 0;
};

// Default continuous horizons: OptSeq 8, OptSeqDp 20, everything else all.
std::size_t default_horizon(PolicyKind kind);

struct OneShotBox {
  double x_min = 3.0;
  double x_max = 5.0;
};

struct PoissonArrivals {
  double lambda = 1.0;  // events per time unit
};

struct UniformSquare {
  double length_scale = 100.0;
};

using ArrivalSpec = std::variant<OneShotBox, PoissonArrivals, UniformSquare>;

struct ScenarioConfig {
  Workspace workspace = Workspace::standard();
  RobotSpec robot;
  PolicySpec policy;
  ArrivalSpec arrival = OneShotBox{};
  int n_objects = 10;
  std::uint64_t seed = 1;

  bool continuous() const {
    return !std::holds_alternative<OneShotBox>(arrival);
  }
  void validate() const;  // throws ConfigError
};

// ---------------------------------------------------------------------------
// Building blocks
// ---------------------------------------------------------------------------

ScaraArm scara_arm_for(const Workspace& ws, const RobotSpec& spec);
std::shared_ptr<const PnpModel> build_model(const Workspace& ws,
                                            const RobotSpec& spec);

// Spawning draws from the (seed, kSpawn) stream. Lists are ordered by spawn
// time and ids are 0..n-1 in that order.
std::vector<ConveyorObject> spawn_one_shot(const ScenarioConfig& cfg);
std::vector<ConveyorObject> spawn_poisson(const ScenarioConfig& cfg);
std::vector<ConveyorObject> spawn_uniform_square(const ScenarioConfig& cfg);
std::vector<ConveyorObject> spawn_objects(const ScenarioConfig& cfg);

// Full plan for a snapshot. Greedy policies replay their rule pick after
// pick; sequence policies call their planner.
PickPlan plan_with(const PlanningSnapshot& snap, const PolicySpec& policy,
                   PlanStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Runs
// ---------------------------------------------------------------------------

struct PickLogEntry {
  int object_id = 0;
  double decision_time = 0.0;
  double pick_time = 0.0;  // moment of the grasp
  Point2 pick_point;

  friend bool operator==(const PickLogEntry&, const PickLogEntry&) = default;
};

struct SimMetrics {
  int picked = 0;
  int missed = 0;
  int total_objects = 0;
  double total_time = 0.0;  // completion of the last pick
  double picked_ratio = 0.0;
  std::uint64_t decisions = 0;
  double mean_pickable = 0.0;  // pickable objects per decision
  std::vector<PickLogEntry> log;

  friend bool operator==(const SimMetrics&, const SimMetrics&) = default;
};

// Plans once over the batch and executes it; an object that turns out to be
// a miss at its turn is skipped and counted in `missed`.
SimMetrics run_one_shot(const ScenarioConfig& cfg);
SimMetrics run_one_shot(const ScenarioConfig& cfg, const PnpModel& model,
                        std::span<const ConveyorObject> objects);

// Event loop: at each decision the robot is idle at the drop-off; objects
// that are already a miss are counted missed, the policy chooses among the
// rest, the first pick runs to completion, and the loop repeats.
SimMetrics run_continuous(const ScenarioConfig& cfg);
SimMetrics run_continuous(const ScenarioConfig& cfg, const PnpModel& model,
                          std::span<const ConveyorObject> objects);

SimMetrics run_scenario(const ScenarioConfig& cfg);

void write_pick_log_csv(std::ostream& out, std::span<const PickLogEntry> log);

}  // namespace pnpseq

#endif  // PNPSEQ_SIM_HPP_
