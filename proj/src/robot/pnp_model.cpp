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

#include <cmath>
#include <sstream>

#include "pnpseq/robot.hpp"

namespace pnpseq {

namespace {

constexpr double kBisectionWidth = 1e-10;
constexpr int kMaxBisections = 200;

simd::TelescopingParams params_for(const TelescopingArm& arm,
                                   const Workspace& ws) {
  return {arm.base.x, arm.rest_radius(), arm.v_e, ws.x_left()};
}

}  // namespace

std::string_view to_string(MissReason reason) {
  switch (reason) {
    case MissReason::kExitsWorkspace:
      return "exits_workspace";
    case MissReason::kUnreachable:
      return "unreachable";
  }
  return "unknown";
}

TelescopingReach::TelescopingReach(TelescopingArm arm) : arm_(arm) {
  arm_.validate();
}

std::optional<ReachTimes> TelescopingReach::reach(Point2 pick) const {
  const double t =
      std::abs(distance(arm_.base, pick) - arm_.rest_radius()) / arm_.v_e;
  return ReachTimes{t, t};
}

std::string TelescopingReach::describe() const {
  std::ostringstream s;
  s << "telescoping(base_x=" << arm_.base.x << ", v_e=" << arm_.v_e << ")";
  return s.str();
}

ScaraReach::ScaraReach(ScaraArm arm) : arm_(arm) {
  arm_.validate();
  auto rest = try_scara_ik(arm_, {0.0, 0.0});
  if (!rest) throw ConfigError("SCARA cannot reach the drop-off point");
  rest_ = *rest;
}

std::optional<ReachTimes> ScaraReach::reach(Point2 pick) const {
  auto q = try_scara_ik(arm_, pick);
  if (!q) return std::nullopt;
  const std::array<double, 2> rest{rest_.shoulder, rest_.elbow};
  const std::array<double, 2> target{q->shoulder, q->elbow};
  const double go = joint_move_time(arm_.joints, rest, target);
  const double back = joint_move_time(arm_.joints, target, rest);
  return ReachTimes{go, back};
}

std::string ScaraReach::describe() const {
  std::ostringstream s;
  s << "scara(base_x=" << arm_.base.x << ", links=" << arm_.link1 << "/"
    << arm_.link2 << ")";
  return s.str();
}

void PnpModel::total_times(std::span<const double> xs,
                           std::span<const double> ys, double shift,
                           std::span<double> out) const {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = get_pnp_time(*this, {xs[i] - shift, ys[i]}).total_or_inf();
  }
}

PnpOutcome get_pnp_time(const PnpModel& model, Point2 obj_pos) {
  const Workspace& ws = model.workspace();
  if (!ws.y_in_band(obj_pos.y)) {
    std::ostringstream msg;
    msg << "object y=" << obj_pos.y << " outside workspace band [0, "
        << ws.y_top() << "]";
    throw InputError(msg.str());
  }
  if (obj_pos.x > ws.x_right() + kTolerance) {
    std::ostringstream msg;
    msg << "object x=" << obj_pos.x << " has not entered the workspace yet";
    throw InputError(msg.str());
  }
  if (obj_pos.x < ws.x_left()) return Miss{MissReason::kExitsWorkspace};
  return model.intercept(obj_pos);
}

PnpOutcome telescoping_intercept(const TelescopingArm& arm, Point2 obj_pos,
                                 const Workspace& ws) {
  arm.validate();
  const double t = simd::telescoping_intercept_scalar(params_for(arm, ws),
                                                      obj_pos.x, obj_pos.y);
  if (std::isinf(t)) return Miss{MissReason::kUnreachable};
  const Point2 pick{obj_pos.x - t, obj_pos.y};
  if (pick.x < ws.x_left()) return Miss{MissReason::kExitsWorkspace};
  return Hit{t + t, t, pick};
}

TelescopingModel::TelescopingModel(TelescopingArm arm, Workspace ws)
    : PnpModel(ws), arm_(arm), params_(params_for(arm, ws)) {
  arm_.validate();
  if (arm_.base.x != ws.robot_base().x) {
    throw ConfigError("telescoping base must match the workspace base");
  }
}

PnpOutcome TelescopingModel::intercept(Point2 obj_pos) const {
  return telescoping_intercept(arm_, obj_pos, workspace());
}

std::optional<ReachTimes> TelescopingModel::reach(Point2 pick) const {
  return TelescopingReach(arm_).reach(pick);
}

void TelescopingModel::total_times(std::span<const double> xs,
                                   std::span<const double> ys, double shift,
                                   std::span<double> out) const {
  simd::telescoping_totals(params_, xs, ys, shift, out);
}

std::string TelescopingModel::describe() const {
  return TelescopingReach(arm_).describe();
}

DirectModel::DirectModel(std::shared_ptr<const ReachModel> reach, Workspace ws,
                         double scan_step)
    : PnpModel(ws), reach_(std::move(reach)), scan_step_(scan_step) {
  if (!reach_) throw ConfigError("direct model needs a reach model");
  if (!(scan_step_ > 0.0)) throw ConfigError("scan step must be positive");
}

std::optional<ReachTimes> DirectModel::reach(Point2 pick) const {
  return reach_->reach(pick);
}

PnpOutcome DirectModel::intercept(Point2 obj_pos) const {
  const double t_max = obj_pos.x - workspace().x_left();
  // g(t) = go(x - t) - t; NaN where the pick point is out of reach.
  auto g = [&](double t) {
    auto r = reach_->reach({obj_pos.x - t, obj_pos.y});
    return r ? r->go - t : std::nan("");
  };

  bool saw_reachable = false;
  double prev_t = 0.0;
  double prev_g = g(0.0);
  if (!std::isnan(prev_g)) {
    saw_reachable = true;
    if (prev_g <= 0.0) {
      auto r = reach_->reach(obj_pos);
      return Hit{r->back, 0.0, obj_pos};
    }
  }

  for (long k = 1; prev_t < t_max; ++k) {
    const double t = std::min(static_cast<double>(k) * scan_step_, t_max);
    const double gt = g(t);
    if (!std::isnan(gt)) saw_reachable = true;
    if (!std::isnan(prev_g) && !std::isnan(gt) && prev_g > 0.0 && gt <= 0.0) {
      double lo = prev_t;
      double hi = t;
      double g_lo = prev_g;
      double g_hi = gt;
      for (int i = 0; i < kMaxBisections && hi - lo > kBisectionWidth; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (std::isnan(gm)) break;
        if (gm > 0.0) {
          lo = mid;
          g_lo = gm;
        } else {
          hi = mid;
          g_hi = gm;
        }
      }
      const double root = std::abs(g_lo) < std::abs(g_hi) ? lo : hi;
      const Point2 pick{obj_pos.x - root, obj_pos.y};
      auto r = reach_->reach(pick);
      return Hit{root + r->back, root, pick};
    }
    prev_t = t;
    prev_g = gt;
  }
  return Miss{saw_reachable ? MissReason::kExitsWorkspace
                            : MissReason::kUnreachable};
}

std::string DirectModel::describe() const {
  return "direct/" + reach_->describe();
}

TwoObjectTimes two_object_times(double x1, double x2, double y1, double y2,
                                double v_e) {
  if (!(v_e > 1.0)) throw ConfigError("two_object_times needs v_e > 1");
  const simd::TelescopingParams origin{0.0, 0.0, v_e, -kInfinity};
  auto stroke = [&](double x, double y) {
    const double d = simd::telescoping_intercept_scalar(origin, x, y);
    if (std::isinf(d)) throw Unreachable("object cannot be intercepted");
    return d;
  };
  // After the first pick-and-return cycle the belt has moved 2 d1.
  auto order_time = [&](double xa, double ya, double xb, double yb) {
    const double d1 = stroke(xa, ya);
    const double d2 = stroke(xb - 2.0 * d1, yb);
    return d1 + d2;
  };
  return {order_time(x1, y1, x2, y2), order_time(x2, y2, x1, y1)};
}

}  // namespace pnpseq
