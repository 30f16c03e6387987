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

#ifndef PNPSEQ_ROBOT_HPP_
#define PNPSEQ_ROBOT_HPP_

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "pnpseq/core.hpp"
#include "pnpseq/simd.hpp"

namespace pnpseq {

// ---------------------------------------------------------------------------
// Robot geometry and joint dynamics
// ---------------------------------------------------------------------------

// End-effector extends/retracts radially from the base at speed v_e; rotation
// is free. At rest the end-effector sits on the drop-off, so the rest arm
// length is |base -> origin|.
struct TelescopingArm {
  Point2 base;
  double v_e = 2.0;

  double rest_radius() const;
  void validate() const;  // throws ConfigError
};

struct JointProfile {
  double v_max = 1.0;  // rad per time unit
  double a_max = 1.0;  // rad per time unit^2
};

enum class Elbow { kUp, kDown };

struct ScaraArm {
  Point2 base;
  double link1 = 1.0;
  double link2 = 1.0;
  std::array<JointProfile, 2> joints{};
  Elbow elbow = Elbow::kUp;

  double min_reach() const;
  double max_reach() const;
  void validate() const;  // throws ConfigError

  // Calibrated default for a workspace: base on the workspace base point,
  // equal links of 0.6 x the farthest corner distance (so the whole band is
  // reachable), and joint limits giving about one pick per time unit.
  static ScaraArm standard_for(const Workspace& ws);
};

struct JointAngles {
  double shoulder = 0.0;
  double elbow = 0.0;
};

// Planar two-link IK; angles in (-pi, pi]. The elbow branch follows
// arm.elbow. A target on the base with equal links returns the folded pose
// (0, pi). Throws Unreachable outside the annulus [|L1-L2|, L1+L2].
JointAngles scara_ik(const ScaraArm& arm, Point2 target);
std::optional<JointAngles> try_scara_ik(const ScaraArm& arm, Point2 target);
Point2 scara_fk(const ScaraArm& arm, JointAngles q);

// Rest-to-rest time-optimal single joint move: trapezoidal when the
// displacement allows reaching v_max, triangular otherwise.
double profile_time(const JointProfile& profile, double displacement);

// Joints move simultaneously; the slowest joint sets the duration.
double joint_move_time(std::span<const JointProfile> profiles,
                       std::span<const double> q_from,
                       std::span<const double> q_to);

// ---------------------------------------------------------------------------
// Static reach times
// ---------------------------------------------------------------------------

struct ReachTimes {
  double go = 0.0;    // drop-off pose -> pick point
  double back = 0.0;  // pick point -> drop-off pose
};

class ReachModel {
 public:
  virtual ~ReachModel() = default;
  // nullopt when the point is out of reach.
  virtual std::optional<ReachTimes> reach(Point2 pick) const = 0;
  virtual std::string describe() const = 0;
};

class TelescopingReach final : public ReachModel {
 public:
  explicit TelescopingReach(TelescopingArm arm);
  std::optional<ReachTimes> reach(Point2 pick) const override;
  std::string describe() const override;
  const TelescopingArm& arm() const { return arm_; }

 private:
  TelescopingArm arm_;
};

class ScaraReach final : public ReachModel {
 public:
  // Throws ConfigError if the drop-off itself is out of reach.
  explicit ScaraReach(ScaraArm arm);
  std::optional<ReachTimes> reach(Point2 pick) const override;
  std::string describe() const override;
  const ScaraArm& arm() const { return arm_; }
  JointAngles rest_pose() const { return rest_; }

 private:
  ScaraArm arm_;
  JointAngles rest_;
};

// ---------------------------------------------------------------------------
// PnP time for a moving object
// ---------------------------------------------------------------------------

enum class MissReason { kExitsWorkspace, kUnreachable };

std::string_view to_string(MissReason reason);

struct Hit {
  double total_time = 0.0;      // go + return
  double intercept_time = 0.0;  // go phase; the object moves this far
  Point2 pick_point;
};

struct Miss {
  MissReason reason = MissReason::kUnreachable;
};

class PnpOutcome {
 public:
  PnpOutcome(Hit hit) : value_(hit) {}    // NOLINT(runtime/explicit)
  PnpOutcome(Miss miss) : value_(miss) {}  // NOLINT(runtime/explicit)

  bool is_hit() const { return std::holds_alternative<Hit>(value_); }
  const Hit& hit() const { return std::get<Hit>(value_); }
  MissReason miss_reason() const { return std::get<Miss>(value_).reason; }
  // Total PnP time, +inf for a miss.
  double total_or_inf() const {
    return is_hit() ? hit().total_time : kInfinity;
  }

 private:
  std::variant<Hit, Miss> value_;
};

// The GetPnPTime abstraction: everything the sequencing layer knows about a
// robot. Implementations are immutable and safe to share across threads.
class PnpModel {
 public:
  explicit PnpModel(Workspace ws) : workspace_(ws) {}
  virtual ~PnpModel() = default;

  const Workspace& workspace() const { return workspace_; }

  // Earliest interception of an object that is at obj_pos now. Callers go
  // through get_pnp_time(), which validates obj_pos first.
  virtual PnpOutcome intercept(Point2 obj_pos) const = 0;

  // Static go/return times at a pick point, used for fixed-point checks.
  virtual std::optional<ReachTimes> reach(Point2 pick) const = 0;

  // Totals for objects at (xs[i] - shift, ys[i]); +inf for misses. The base
  // version loops intercept(); models with a vector kernel override it.
  virtual void total_times(std::span<const double> xs,
                           std::span<const double> ys, double shift,
                           std::span<double> out) const;

  virtual std::string describe() const = 0;

 private:
  Workspace workspace_;
};

// Throws InputError when obj_pos is outside the y band or right of x_right.
// Objects already left of x_left are a Miss{kExitsWorkspace}.
PnpOutcome get_pnp_time(const PnpModel& model, Point2 obj_pos);

// Closed-form telescoping interception; Miss{kExitsWorkspace} when the
// intercept lies left of the workspace.
PnpOutcome telescoping_intercept(const TelescopingArm& arm, Point2 obj_pos,
                                 const Workspace& ws);

class TelescopingModel final : public PnpModel {
 public:
  TelescopingModel(TelescopingArm arm, Workspace ws);

  PnpOutcome intercept(Point2 obj_pos) const override;
  std::optional<ReachTimes> reach(Point2 pick) const override;
  void total_times(std::span<const double> xs, std::span<const double> ys,
                   double shift, std::span<double> out) const override;
  std::string describe() const override;

  const TelescopingArm& arm() const { return arm_; }

 private:
  TelescopingArm arm_;
  simd::TelescopingParams params_;
};

// Solves go_time(x - t, y) = t directly on a reach model: scan t at a fixed
// step for the first sign change, then bisect.
class DirectModel final : public PnpModel {
 public:
  static constexpr double kDefaultScanStep = 0.01;

  DirectModel(std::shared_ptr<const ReachModel> reach, Workspace ws,
              double scan_step = kDefaultScanStep);

  PnpOutcome intercept(Point2 obj_pos) const override;
  std::optional<ReachTimes> reach(Point2 pick) const override;
  std::string describe() const override;

 private:
  std::shared_ptr<const ReachModel> reach_;
  double scan_step_;
};

// ---------------------------------------------------------------------------
// Two-object telescoping analysis (base and drop-off both at the origin)
// ---------------------------------------------------------------------------

// d1 + d2 for each picking order, where d1 and d2 are the belt distances
// covered while the arm reaches the first and the second object. This is the
// magnitude in which the two-object trade-off is usually quoted; the full
// PnP cycle of the telescoping arm lasts twice as long.
struct TwoObjectTimes {
  double t12 = 0.0;  // o1 first
  double t21 = 0.0;  // o2 first

  double cycle12() const { return 2.0 * t12; }
  double cycle21() const { return 2.0 * t21; }
};

// Throws ConfigError for v_e <= 1 and Unreachable if either interception
// quadratic lacks a non-negative root.
TwoObjectTimes two_object_times(double x1, double x2, double y1, double y2,
                                double v_e);

}  // namespace pnpseq

#endif  // PNPSEQ_ROBOT_HPP_
