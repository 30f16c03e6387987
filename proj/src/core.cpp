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

#include "pnpseq/core.hpp"

#include <cmath>
#include <sstream>
#include <unordered_set>

namespace pnpseq {

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

Workspace::Workspace(double x_left, double x_right, double y_top,
                     double base_x)
    : x_left_(x_left), x_right_(x_right), y_top_(y_top), base_x_(base_x) {
  if (!std::isfinite(x_left) || !std::isfinite(x_right) ||
      !std::isfinite(y_top) || !std::isfinite(base_x)) {
    throw ConfigError("workspace bounds must be finite");
  }
  if (!(x_left < x_right)) throw ConfigError("workspace needs x_left < x_right");
  if (!(y_top > 0.0)) throw ConfigError("workspace needs y_top > 0");
}

Workspace Workspace::standard() { return Workspace(-5.0, 5.0, 5.0, 0.0); }

bool Workspace::contains(Point2 p) const {
  return p.x >= x_left_ - kTolerance && p.x <= x_right_ + kTolerance &&
         y_in_band(p.y);
}

bool Workspace::y_in_band(double y) const {
  return y >= -kTolerance && y <= y_top_ + kTolerance;
}

Point2 position_at(const ConveyorObject& obj, double t) {
  if (t < obj.spawn_time) {
    std::ostringstream msg;
    msg << "object " << obj.id << " queried at t=" << t
        << " before it spawned at t=" << obj.spawn_time;
    throw InputError(msg.str());
  }
  return {obj.spawn_pos.x - (t - obj.spawn_time), obj.spawn_pos.y};
}

std::string validate_plan(const PickPlan& plan) {
  std::unordered_set<int> seen;
  for (int id : plan.order) {
    if (!seen.insert(id).second) return "duplicate id in order";
  }
  if (plan.pick_times.size() > plan.order.size()) {
    return "more pick times than picks";
  }
  for (std::size_t i = 1; i < plan.pick_times.size(); ++i) {
    if (!(plan.pick_times[i] > plan.pick_times[i - 1])) {
      return "pick times not strictly increasing";
    }
  }
  const bool all_done = plan.pick_times.size() == plan.order.size();
  if (plan.feasible != all_done) return "feasible flag disagrees with picks";
  if (plan.feasible) {
    const double last = plan.pick_times.empty() ? 0.0 : plan.pick_times.back();
    if (plan.total_time != last) return "total_time differs from last pick";
  } else if (!std::isinf(plan.total_time)) {
    return "infeasible plan with finite total_time";
  }
  return {};
}

}  // namespace pnpseq
