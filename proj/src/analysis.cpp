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

#include "pnpseq/analysis.hpp"

#include <cmath>
#include <string>

#include "pnpseq/rng.hpp"
#include "pnpseq/robot.hpp"
#include "pnpseq/sequencing.hpp"
#include "pnpseq/text.hpp"

namespace pnpseq {

double delta_t(double x1, double x2, double y1, double y2, double v_e) {
  TwoObjectTimes t = two_object_times(x1, x2, y1, y2, v_e);
  return t.t12 - t.t21;
}

DeltaTSample sample_fx(double x, double y1, double y2, double v_e) {
  TwoObjectTimes t = two_object_times(x, x, y1, y2, v_e);
  return {x, t.t12 - t.t21, t.t12, t.t21};
}

double find_root(double y1, double y2, double v_e, double x_lo,
                 double x_hi) {
  if (!(x_lo < x_hi)) throw InputError("find_root needs x_lo < x_hi");
  auto f = [&](double x) { return delta_t(x, x, y1, y2, v_e); };
  double lo = x_lo;
  double hi = x_hi;
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (!(f_lo * f_hi < 0.0)) {
    throw InputError("f has no sign change on [" + format_double(x_lo) +
                     ", " + format_double(x_hi) + "]");
  }
  while (hi - lo > 1e-9) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<DeltaTSample> sweep_fx(double y1, double y2, double v_e,
                                   double x_lo, double x_hi, int steps) {
  if (steps < 2) throw InputError("sweep needs at least 2 steps");
  std::vector<DeltaTSample> out;
  out.reserve(static_cast<std::size_t>(steps));
  const double h = (x_hi - x_lo) / (steps - 1);
  for (int i = 0; i < steps; ++i) {
    double x = i == steps - 1 ? x_hi : x_lo + h * i;
    out.push_back(sample_fx(x, y1, y2, v_e));
  }
  return out;
}

std::vector<OrderDistributionRecord> order_distribution_study(
    const OrderStudyParams& p) {
  if (p.num_instances < 1 || p.n < 1) {
    throw ConfigError("study needs at least one instance and one object");
  }
  if (static_cast<std::size_t>(p.n) > kOptSeqDpMaxObjects) {
    throw GuardLimit("study instances are solved exactly; n too large");
  }
  if (!(p.box.x_min < p.box.x_max) || !(p.box.y_min < p.box.y_max) ||
      p.box.y_min < 0.0) {
    throw ConfigError("invalid spawn box");
  }
  Workspace ws(-1000.0, p.box.x_max, p.box.y_max);
  TelescopingModel model(TelescopingArm{{0.0, 0.0}, p.v_e}, ws);

  std::vector<OrderDistributionRecord> records;
  records.reserve(static_cast<std::size_t>(p.num_instances * p.n));
  for (int inst = 0; inst < p.num_instances; ++inst) {
    Rng rng(p.seed, Stream::kStudy, static_cast<std::uint64_t>(inst));
    std::vector<SnapshotObject> objs;
    for (int i = 0; i < p.n; ++i) {
      double x = rng.uniform(p.box.x_min, p.box.x_max);
      double y = rng.uniform(p.box.y_min, p.box.y_max);
      objs.push_back({i, {x, y}});
    }
    PlanningSnapshot snap(objs, model);
    PickPlan plan = opt_seq_dp(snap);
    std::vector<int> rank(static_cast<std::size_t>(p.n), -1);
    for (std::size_t r = 0; r < plan.order.size(); ++r) {
      rank[static_cast<std::size_t>(plan.order[r])] = static_cast<int>(r);
    }
    for (int i = 0; i < p.n; ++i) {
      records.push_back({inst, i, objs[static_cast<std::size_t>(i)].pos,
                         rank[static_cast<std::size_t>(i)]});
    }
  }
  return records;
}

double mean_x_at_rank(std::span<const OrderDistributionRecord> records,
                      int rank) {
  double sum = 0.0;
  int count = 0;
  for (const auto& r : records) {
    if (r.pick_rank != rank) continue;
    sum += r.initial_pos.x;
    ++count;
  }
  return count == 0 ? std::nan("") : sum / count;
}

void write_delta_csv(std::ostream& out, std::span<const DeltaTSample> samples) {
  out << "x,delta_t,t12,t21\n";
  for (const auto& s : samples) {
    write_csv_row(out, {format_double(s.x), format_double(s.delta_t),
                        format_double(s.t12), format_double(s.t21)});
  }
}

void write_order_csv(std::ostream& out,
                     std::span<const OrderDistributionRecord> records) {
  out << "instance_id,object_id,x,y,pick_rank\n";
  for (const auto& r : records) {
    write_csv_row(out, {std::to_string(r.instance_id),
                        std::to_string(r.object_id),
                        format_double(r.initial_pos.x),
                        format_double(r.initial_pos.y),
                        std::to_string(r.pick_rank)});
  }
}

}  // namespace pnpseq
