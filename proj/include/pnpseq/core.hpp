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

#ifndef PNPSEQ_CORE_HPP_
#define PNPSEQ_CORE_HPP_

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

// Shared geometry and plan types.
//
// Conventions: the conveyor moves right to left at unit speed, so every time
// and length is a dimensionless real and robot speeds are relative to the
// belt. The drop-off point is the origin and the robot base sits on y = 0.

namespace pnpseq {

inline constexpr double kTolerance = 1e-9;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Bad arguments to a query (object outside the workspace band, unknown id).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Invalid model, workspace or scenario parameters.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A target outside the robot's reach, or an equation without a usable root.
class Unreachable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Planner refused because the instance exceeds its size guard.
class GuardLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

// SPT had nothing it could pick.
class NoFeasiblePick : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

double distance(Point2 a, Point2 b);

// Axis-aligned pickable region [x_left, x_right] x [0, y_top]. The drop-off
// is pinned to the origin; the robot base may slide along y = 0.
class Workspace {
 public:
  Workspace(double x_left, double x_right, double y_top, double base_x = 0.0);

  // 10 x 5 band used throughout the experiments: x in [-5, 5], y in [0, 5].
  static Workspace standard();

  double x_left() const { return x_left_; }
  double x_right() const { return x_right_; }
  double y_bottom() const { return 0.0; }
  double y_top() const { return y_top_; }
  Point2 robot_base() const { return {base_x_, 0.0}; }
  Point2 dropoff() const { return {0.0, 0.0}; }
  double width() const { return x_right_ - x_left_; }

  bool contains(Point2 p) const;
  bool y_in_band(double y) const;

  friend bool operator==(const Workspace&, const Workspace&) = default;

 private:
  double x_left_;
  double x_right_;
  double y_top_;
  double base_x_;
};

struct ConveyorObject {
  int id = 0;
  Point2 spawn_pos;
  double spawn_time = 0.0;

  friend bool operator==(const ConveyorObject&, const ConveyorObject&) =
      default;
};

// Position on the belt at time t. Throws InputError for t < spawn_time.
Point2 position_at(const ConveyorObject& obj, double t);

// Picking order with cumulative completion times.
//
// `pick_times` covers only the picks completed before the first miss, so an
// infeasible plan has fewer pick times than ids and total_time = +inf.
struct PickPlan {
  std::vector<int> order;
  std::vector<double> pick_times;
  double total_time = 0.0;
  bool feasible = true;

  std::size_t completed() const { return pick_times.size(); }
  // Time spent on the completed prefix.
  double elapsed() const {
    return pick_times.empty() ? 0.0 : pick_times.back();
  }
};

// Lexicographic plan quality: more completed picks first, then less time.
struct PlanKey {
  std::size_t completed = 0;
  double elapsed = 0.0;

  static PlanKey of(const PickPlan& plan) {
    return {plan.completed(), plan.elapsed()};
  }
  bool better_than(const PlanKey& other) const {
    if (completed != other.completed) return completed > other.completed;
    return elapsed < other.elapsed;
  }
};

// Checks the PickPlan invariants; returns an empty string when they hold.
std::string validate_plan(const PickPlan& plan);

}  // namespace pnpseq

#endif  // PNPSEQ_CORE_HPP_
