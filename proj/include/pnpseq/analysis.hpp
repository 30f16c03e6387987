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

#ifndef PNPSEQ_ANALYSIS_HPP_
#define PNPSEQ_ANALYSIS_HPP_

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "pnpseq/core.hpp"

// Two-object order analysis and the optimal-order distribution study. The
// robot is a telescoping arm with base and drop-off both at the origin.

namespace pnpseq {

struct DeltaTSample {
  double x = 0.0;
  double delta_t = 0.0;
  double t12 = 0.0;
  double t21 = 0.0;
};

// t12 - t21 from two_object_times (stroke-sum magnitude).
double delta_t(double x1, double x2, double y1, double y2, double v_e);

// f(x) = delta_t(x, x, y1, y2, v_e).
DeltaTSample sample_fx(double x, double y1, double y2, double v_e);

// Bisection on f over [x_lo, x_hi] until the bracket is below 1e-9. Throws
// InputError when f does not change sign on the bracket.
double find_root(double y1, double y2, double v_e, double x_lo, double x_hi);

// `steps` evenly spaced samples including both ends. Throws InputError for
// steps < 2.
std::vector<DeltaTSample> sweep_fx(double y1, double y2, double v_e,
                                   double x_lo, double x_hi, int steps);

struct SpawnBox {
  double x_min = 2.0;
  double x_max = 8.0;
  double y_min = 0.0;
  double y_max = 3.0;
};

struct OrderStudyParams {
  int num_instances = 100;
  int n = 10;
  SpawnBox box;
  double v_e = 5.0;
  std::uint64_t seed = 1;
};

struct OrderDistributionRecord {
  int instance_id = 0;
  int object_id = 0;
  Point2 initial_pos;
  int pick_rank = 0;  // 0 = picked first
};

// Random instances in the box solved with opt_seq_dp. The workspace extends
// far to the left so every instance is fully pickable. Records are ordered
// by instance, then object id.
std::vector<OrderDistributionRecord> order_distribution_study(
    const OrderStudyParams& params);

// Mean initial x of the objects picked at `rank`; NaN when there are none.
double mean_x_at_rank(std::span<const OrderDistributionRecord> records,
                      int rank);

void write_delta_csv(std::ostream& out, std::span<const DeltaTSample> samples);
void write_order_csv(std::ostream& out,
                     std::span<const OrderDistributionRecord> records);

}  // namespace pnpseq

#endif  // PNPSEQ_ANALYSIS_HPP_
