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

#include "pnpseq/sequencing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace pnpseq {

namespace {

void count_calls(PlanStats* stats, std::uint64_t n) {
  if (stats != nullptr) stats->pnp_calls += n;
}

Point2 advect(Point2 p, double t) { return {p.x - t, p.y}; }

// Executes `order` and moves every object that is a miss at its turn to the
// tail (skip semantics). The result always has a hit-only prefix.
PickPlan compact_evaluate(const PlanningSnapshot& snap,
                          std::span<const int> order, PlanStats* stats) {
  PickPlan plan;
  std::vector<int> skipped;
  double t = 0.0;
  for (int id : order) {
    const SnapshotObject& obj = snap.objects()[*snap.index_of(id)];
    PnpOutcome out = get_pnp_time(snap.model(), advect(obj.pos, t));
    count_calls(stats, 1);
    if (out.is_hit()) {
      t += out.hit().total_time;
      plan.order.push_back(id);
      plan.pick_times.push_back(t);
    } else {
      skipped.push_back(id);
    }
  }
  plan.feasible = skipped.empty();
  plan.total_time = plan.feasible ? t : kInfinity;
  plan.order.insert(plan.order.end(), skipped.begin(), skipped.end());
  return plan;
}

void check_order(const PlanningSnapshot& snap, std::span<const int> order) {
  std::vector<char> seen(snap.size(), 0);
  for (int id : order) {
    auto idx = snap.index_of(id);
    if (!idx) throw InputError("unknown object id " + std::to_string(id));
    if (seen[*idx]) {
      throw InputError("object id " + std::to_string(id) + " repeated");
    }
    seen[*idx] = 1;
  }
}

double euclid(const PlanningSnapshot& snap, Point2 p) {
  return distance(p, snap.workspace().dropoff());
}

}  // namespace

PlanningSnapshot::PlanningSnapshot(std::vector<SnapshotObject> objects,
                                   const PnpModel& model)
    : objects_(std::move(objects)), model_(&model) {
  std::sort(objects_.begin(), objects_.end(),
            [](const SnapshotObject& a, const SnapshotObject& b) {
              return a.id < b.id;
            });
  const Workspace& ws = model.workspace();
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    const SnapshotObject& o = objects_[i];
    if (i > 0 && objects_[i - 1].id == o.id) {
      throw InputError("duplicate object id " + std::to_string(o.id));
    }
    if (!std::isfinite(o.pos.x) || !ws.y_in_band(o.pos.y) ||
        o.pos.x > ws.x_right() + kTolerance) {
      throw InputError("object " + std::to_string(o.id) +
                       " is outside the workspace band");
    }
  }
}

std::optional<std::size_t> PlanningSnapshot::index_of(int id) const {
  auto it = std::lower_bound(
      objects_.begin(), objects_.end(), id,
      [](const SnapshotObject& o, int v) { return o.id < v; });
  if (it == objects_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - objects_.begin());
}

PlanningSnapshot PlanningSnapshot::advanced(double dt) const {
  std::vector<SnapshotObject> moved = objects_;
  for (SnapshotObject& o : moved) o.pos = advect(o.pos, dt);
  return PlanningSnapshot(std::move(moved), *model_);
}

std::string_view to_string(GreedyPolicy policy) {
  switch (policy) {
    case GreedyPolicy::kFifo:
      return "fifo";
    case GreedyPolicy::kSpt:
      return "spt";
    case GreedyPolicy::kEuclidean:
      return "euclidean";
  }
  return "?";
}

PickPlan evaluate_sequence(const PlanningSnapshot& snap,
                           std::span<const int> order, PlanStats* stats) {
  check_order(snap, order);
  PickPlan plan;
  plan.order.assign(order.begin(), order.end());
  double t = 0.0;
  for (int id : order) {
    const SnapshotObject& obj = snap.objects()[*snap.index_of(id)];
    PnpOutcome out = get_pnp_time(snap.model(), advect(obj.pos, t));
    count_calls(stats, 1);
    if (!out.is_hit()) {
      plan.feasible = false;
      plan.total_time = kInfinity;
      return plan;
    }
    t += out.hit().total_time;
    plan.pick_times.push_back(t);
  }
  plan.total_time = t;
  return plan;
}

int greedy_select(const PlanningSnapshot& snap, GreedyPolicy policy,
                  PlanStats* stats) {
  if (snap.size() == 0) throw InputError("greedy_select on an empty snapshot");
  auto objs = snap.objects();
  std::size_t best = 0;
  switch (policy) {
    case GreedyPolicy::kFifo:
      for (std::size_t i = 1; i < objs.size(); ++i) {
        if (objs[i].pos.x < objs[best].pos.x) best = i;
      }
      return objs[best].id;
    case GreedyPolicy::kEuclidean:
      for (std::size_t i = 1; i < objs.size(); ++i) {
        if (euclid(snap, objs[i].pos) < euclid(snap, objs[best].pos)) best = i;
      }
      return objs[best].id;
    case GreedyPolicy::kSpt:
      break;
  }
  double best_t = kInfinity;
  bool found = false;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    double t = get_pnp_time(snap.model(), objs[i].pos).total_or_inf();
    count_calls(stats, 1);
    if (std::isfinite(t) && (!found || t < best_t)) {
      best = i;
      best_t = t;
      found = true;
    }
  }
  if (!found) throw NoFeasiblePick("every object is a miss");
  return objs[best].id;
}

std::vector<int> greedy_order(const PlanningSnapshot& snap,
                              GreedyPolicy policy, PlanStats* stats) {
  const std::size_t n = snap.size();
  auto objs = snap.objects();
  std::vector<std::size_t> remaining(n);
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});
  std::vector<double> xs(n), ys(n), totals(n);
  std::vector<int> order;
  order.reserve(n);
  double t = 0.0;
  while (!remaining.empty()) {
    const std::size_t m = remaining.size();
    for (std::size_t k = 0; k < m; ++k) {
      xs[k] = objs[remaining[k]].pos.x;
      ys[k] = objs[remaining[k]].pos.y;
    }
    snap.model().total_times({xs.data(), m}, {ys.data(), m}, t,
                             {totals.data(), m});
    count_calls(stats, m);
    // remaining stays in index order, so strict comparisons keep the lowest
    // id on ties
    std::size_t best = m;
    double best_score = kInfinity;
    for (std::size_t k = 0; k < m; ++k) {
      if (!std::isfinite(totals[k])) continue;
      double score = 0.0;
      switch (policy) {
        case GreedyPolicy::kFifo:
          score = xs[k];
          break;
        case GreedyPolicy::kSpt:
          score = totals[k];
          break;
        case GreedyPolicy::kEuclidean:
          score = euclid(snap, {xs[k] - t, ys[k]});
          break;
      }
      if (best == m || score < best_score) {
        best = k;
        best_score = score;
      }
    }
    if (best == m) break;
    order.push_back(objs[remaining[best]].id);
    t += totals[best];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  for (std::size_t idx : remaining) order.push_back(objs[idx].id);
  return order;
}

PickPlan opt_seq(const PlanningSnapshot& snap, PlanStats* stats) {
  const std::size_t n = snap.size();
  if (n > kOptSeqMaxObjects) {
    throw GuardLimit("opt_seq supports at most " +
                     std::to_string(kOptSeqMaxObjects) + " objects, got " +
                     std::to_string(n));
  }
  auto objs = snap.objects();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> best_perm = perm;
  PlanKey best_key{0, kInfinity};
  bool have_best = false;
  std::uint64_t calls = 0;
  std::uint64_t perms = 0;
  do {
    ++perms;
    double t = 0.0;
    std::size_t done = 0;
    for (std::size_t idx : perm) {
      PnpOutcome out = get_pnp_time(snap.model(), advect(objs[idx].pos, t));
      ++calls;
      if (!out.is_hit()) break;
      t += out.hit().total_time;
      ++done;
    }
    PlanKey key{done, t};
    if (!have_best || key.better_than(best_key)) {
      best_key = key;
      best_perm = perm;
      have_best = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (stats != nullptr) {
    stats->pnp_calls += calls;
    stats->permutations += perms;
  }
  std::vector<int> order;
  order.reserve(n);
  for (std::size_t idx : best_perm) order.push_back(objs[idx].id);
  return evaluate_sequence(snap, order);
}

PickPlan opt_seq_dp(const PlanningSnapshot& snap, PlanStats* stats) {
  const std::size_t n = snap.size();
  if (n > kOptSeqDpMaxObjects) {
    throw GuardLimit("opt_seq_dp supports at most " +
                     std::to_string(kOptSeqDpMaxObjects) + " objects, got " +
                     std::to_string(n));
  }
  if (n == 0) return PickPlan{};
  auto objs = snap.objects();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<double> best(std::size_t{full} + 1, kInfinity);
  std::vector<std::int8_t> last(std::size_t{full} + 1, -1);
  best[0] = 0.0;

  std::vector<double> xs(n), ys(n), cx(n), cy(n), out(n);
  std::vector<std::int8_t> cidx(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = objs[i].pos.x;
    ys[i] = objs[i].pos.y;
  }
  std::uint64_t calls = 0;
  // Every proper subset of U is numerically smaller than U, so ascending
  // order finalises best[U] before it is extended.
  for (std::uint32_t u = 0; u < full; ++u) {
    const double tu = best[u];
    if (!std::isfinite(tu)) continue;
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((u >> i) & 1u) continue;
      cidx[m] = static_cast<std::int8_t>(i);
      cx[m] = xs[i];
      cy[m] = ys[i];
      ++m;
    }
    snap.model().total_times({cx.data(), m}, {cy.data(), m}, tu,
                             {out.data(), m});
    calls += m;
    for (std::size_t k = 0; k < m; ++k) {
      if (!std::isfinite(out[k])) continue;
      const double c = tu + out[k];
      const std::uint32_t v = u | (std::uint32_t{1} << cidx[k]);
      if (c < best[v] || (c == best[v] && cidx[k] < last[v])) {
        best[v] = c;
        last[v] = cidx[k];
      }
    }
  }
  count_calls(stats, calls);

  std::uint32_t chosen = full;
  if (!std::isfinite(best[full])) {
    chosen = 0;
    for (std::uint32_t u = 1; u < full; ++u) {
      if (!std::isfinite(best[u])) continue;
      const int pu = std::popcount(u);
      const int pc = std::popcount(chosen);
      if (pu > pc || (pu == pc && best[u] < best[chosen])) chosen = u;
    }
  }

  std::vector<std::size_t> seq;
  for (std::uint32_t u = chosen; u != 0;) {
    auto i = static_cast<std::size_t>(last[u]);
    seq.push_back(i);
    u &= ~(std::uint32_t{1} << i);
  }
  std::reverse(seq.begin(), seq.end());

  PickPlan plan;
  std::uint32_t acc = 0;
  for (std::size_t i : seq) {
    acc |= std::uint32_t{1} << i;
    plan.order.push_back(objs[i].id);
    plan.pick_times.push_back(best[acc]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!((chosen >> i) & 1u)) plan.order.push_back(objs[i].id);
  }
  plan.feasible = chosen == full;
  plan.total_time = plan.feasible ? best[full] : kInfinity;
  return plan;
}

PickPlan sub_opt_dp(const PlanningSnapshot& snap, SubOptParams params,
                    PlanStats* stats) {
  const std::size_t n = snap.size();
  if (params.window < 2) throw ConfigError("window must be at least 2");
  if (params.window > kOptSeqDpMaxObjects) {
    throw GuardLimit("window larger than " +
                     std::to_string(kOptSeqDpMaxObjects));
  }
  if (n == 0) return PickPlan{};
  const std::size_t m2 = params.window;
  const std::size_t sweeps = params.sweeps.value_or(n);

  std::vector<int> init = greedy_order(snap, params.init, stats);
  PickPlan plan = compact_evaluate(snap, init, stats);

  const std::size_t windows = n <= m2 ? 1 : n - m2 + 1;
  std::vector<SnapshotObject> sub;
  for (std::size_t s = 0; s < sweeps; ++s) {
    if (stats != nullptr) ++stats->sweeps;
    bool changed = false;
    for (std::size_t k = 0; k < windows; ++k) {
      // the window may only start once the prefix before it is picked
      if (k > plan.completed()) break;
      const std::size_t len = std::min(m2, n - k);
      const double t = k == 0 ? 0.0 : plan.pick_times[k - 1];
      sub.clear();
      for (std::size_t j = k; j < k + len; ++j) {
        const SnapshotObject& o = snap.objects()[*snap.index_of(plan.order[j])];
        sub.push_back({o.id, advect(o.pos, t)});
      }
      PickPlan local = opt_seq_dp(PlanningSnapshot(sub, snap.model()), stats);

      std::vector<int> candidate(plan.order.begin(),
                                 plan.order.begin() +
                                     static_cast<std::ptrdiff_t>(k));
      candidate.insert(candidate.end(), local.order.begin(), local.order.end());
      candidate.insert(candidate.end(),
                       plan.order.begin() + static_cast<std::ptrdiff_t>(k + len),
                       plan.order.end());
      PickPlan cand = compact_evaluate(snap, candidate, stats);

      SpliceRecord rec{k, PlanKey::of(plan), PlanKey::of(cand), false};
      rec.accepted = rec.after.better_than(rec.before);
      if (rec.accepted) {
        plan = std::move(cand);
        changed = true;
      }
      if (stats != nullptr) stats->splices.push_back(rec);
    }
    if (!changed) break;
  }
  return plan;
}

}  // namespace pnpseq
