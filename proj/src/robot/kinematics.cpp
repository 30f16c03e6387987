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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pnpseq/robot.hpp"

namespace pnpseq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kReachSlack = 1e-12;

// Calibration for ScaraArm::standard_for, in belt-relative units.
constexpr double kStandardLinkFraction = 0.6;
constexpr JointProfile kStandardShoulder{3.0, 12.0};
constexpr JointProfile kStandardElbow{3.0, 12.0};

double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);  // [-pi, pi]
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

}  // namespace

double TelescopingArm::rest_radius() const { return std::abs(base.x); }

void TelescopingArm::validate() const {
  if (!(v_e > 1.0) || !std::isfinite(v_e)) {
    throw ConfigError("telescoping arm needs v_e > 1 to outrun the belt");
  }
  if (base.y != 0.0 || !std::isfinite(base.x)) {
    throw ConfigError("telescoping base must lie on y = 0");
  }
}

double ScaraArm::min_reach() const { return std::abs(link1 - link2); }
double ScaraArm::max_reach() const { return link1 + link2; }

void ScaraArm::validate() const {
  if (!(link1 > 0.0) || !(link2 > 0.0)) {
    throw ConfigError("SCARA link lengths must be positive");
  }
  if (base.y != 0.0 || !std::isfinite(base.x)) {
    throw ConfigError("SCARA base must lie on y = 0");
  }
  for (const JointProfile& j : joints) {
    if (!(j.v_max > 0.0) || !(j.a_max > 0.0) || !std::isfinite(j.v_max) ||
        !std::isfinite(j.a_max)) {
      throw ConfigError("joint limits must be positive and finite");
    }
  }
}

ScaraArm ScaraArm::standard_for(const Workspace& ws) {
  const Point2 base = ws.robot_base();
  const double far = std::max(
      {distance(base, {ws.x_left(), 0.0}), distance(base, {ws.x_right(), 0.0}),
       distance(base, {ws.x_left(), ws.y_top()}),
       distance(base, {ws.x_right(), ws.y_top()})});
  ScaraArm arm;
  arm.base = base;
  arm.link1 = kStandardLinkFraction * far;
  arm.link2 = kStandardLinkFraction * far;
  arm.joints = {kStandardShoulder, kStandardElbow};
  arm.elbow = Elbow::kUp;
  return arm;
}

std::optional<JointAngles> try_scara_ik(const ScaraArm& arm, Point2 target) {
  const double dx = target.x - arm.base.x;
  const double dy = target.y - arm.base.y;
  const double r2 = dx * dx + dy * dy;
  const double l1 = arm.link1;
  const double l2 = arm.link2;

  if (std::sqrt(r2) < kReachSlack) {
    if (std::abs(l1 - l2) < kReachSlack) return JointAngles{0.0, kPi};
    return std::nullopt;
  }
  double c = (r2 - l1 * l1 - l2 * l2) / (2.0 * l1 * l2);
  if (c > 1.0 + kReachSlack || c < -1.0 - kReachSlack) return std::nullopt;
  c = std::clamp(c, -1.0, 1.0);

  double elbow = std::acos(c);  // [0, pi]
  if (arm.elbow == Elbow::kDown && elbow < kPi) elbow = -elbow;
  const double shoulder =
      std::atan2(dy, dx) -
      std::atan2(l2 * std::sin(elbow), l1 + l2 * std::cos(elbow));
  return JointAngles{wrap_angle(shoulder), elbow};
}

JointAngles scara_ik(const ScaraArm& arm, Point2 target) {
  if (auto q = try_scara_ik(arm, target)) return *q;
  std::ostringstream msg;
  msg << "target (" << target.x << ", " << target.y
      << ") outside SCARA reach annulus [" << arm.min_reach() << ", "
      << arm.max_reach() << "]";
  throw Unreachable(msg.str());
}

Point2 scara_fk(const ScaraArm& arm, JointAngles q) {
  const double a = q.shoulder;
  const double b = q.shoulder + q.elbow;
  return {arm.base.x + arm.link1 * std::cos(a) + arm.link2 * std::cos(b),
          arm.base.y + arm.link1 * std::sin(a) + arm.link2 * std::sin(b)};
}

double profile_time(const JointProfile& profile, double displacement) {
  const double d = std::abs(displacement);
  const double v = profile.v_max;
  const double a = profile.a_max;
  if (d >= v * v / a) return d / v + v / a;
  return 2.0 * std::sqrt(d / a);
}

double joint_move_time(std::span<const JointProfile> profiles,
                       std::span<const double> q_from,
                       std::span<const double> q_to) {
  if (q_from.size() != q_to.size() || profiles.size() != q_from.size()) {
    throw InputError("joint_move_time: profile/angle count mismatch");
  }
  double slowest = 0.0;
  for (std::size_t j = 0; j < profiles.size(); ++j) {
    slowest = std::max(slowest, profile_time(profiles[j], q_to[j] - q_from[j]));
  }
  return slowest;
}

}  // namespace pnpseq
