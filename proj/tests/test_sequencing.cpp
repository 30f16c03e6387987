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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pnpseq/sequencing.hpp"

using namespace pnpseq;
using doctest::Approx;

namespace {

TelescopingModel telescoping(double v_e, Workspace ws = Workspace::standard()) {
  return TelescopingModel({{ws.robot_base().x, 0.0}, v_e}, ws);
}

PlanningSnapshot snap_of(const PnpModel& m,
                         std::vector<SnapshotObject> objs) {
  return PlanningSnapshot(std::move(objs), m);
}

}  // namespace

TEST_CASE("snapshot validation") {
  auto m = telescoping(2.0);
  CHECK_THROWS_AS(snap_of(m, {{1, {0.0, 1.0}}, {1, {2.0, 1.0}}}), InputError);
  CHECK_THROWS_AS(snap_of(m, {{1, {0.0, 6.0}}}), InputError);
  CHECK_THROWS_AS(snap_of(m, {{1, {5.5, 1.0}}}), InputError);
  CHECK_NOTHROW(snap_of(m, {{1, {-7.0, 1.0}}}));  // already gone, a miss
  auto s = snap_of(m, {{7, {1.0, 1.0}}, {3, {2.0, 1.0}}});
  CHECK(s.objects()[0].id == 3);
  CHECK(s.index_of(7) == 1u);
  CHECK_FALSE(s.index_of(4).has_value());
  auto moved = s.advanced(0.5);
  CHECK(moved.objects()[1].pos.x == 0.5);
}

TEST_CASE("evaluate_sequence on the belt line") {
  auto m = telescoping(2.0);
  auto s = snap_of(m, {{0, {3.0, 0.0}}, {1, {4.5, 0.0}}});
  std::vector<int> order{0, 1};
  PickPlan p = evaluate_sequence(s, order);
  REQUIRE(p.feasible);
  REQUIRE(p.pick_times.size() == 2);
  CHECK(p.pick_times[0] == Approx(2.0));
  CHECK(p.total_time == Approx(2.0 + 5.0 / 3.0));
  CHECK(validate_plan(p).empty());

  std::vector<int> bad{0, 0};
  CHECK_THROWS_AS(evaluate_sequence(s, bad), InputError);
  std::vector<int> unknown{0, 5};
  CHECK_THROWS_AS(evaluate_sequence(s, unknown), InputError);
}

TEST_CASE("evaluate_sequence stops at the first miss") {
  auto m = telescoping(2.0);
  auto s = snap_of(m, {{0, {4.0, 4.0}}, {1, {-4.0, 3.0}}, {2, {1.0, 1.0}}});
  std::vector<int> order{0, 1, 2};
  PickPlan p = evaluate_sequence(s, order);
  CHECK_FALSE(p.feasible);
  CHECK(p.pick_times.size() == 1);
  CHECK(std::isinf(p.total_time));
  CHECK(validate_plan(p).empty());
}

TEST_CASE("evaluate_sequence matches step-by-step execution") {
  auto m = telescoping(3.0);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    auto s = snap_of(m, oracle::random_objects(rng, 5, 0.0, 5.0, 0.0, 5.0));
    std::vector<int> order{0, 1, 2, 3, 4};
    std::shuffle(order.begin(), order.end(), rng);
    PickPlan p = evaluate_sequence(s, order);
    double ref = oracle::resimulate(s, order);
    if (std::isinf(ref)) {
      CHECK_FALSE(p.feasible);
    } else {
      CHECK(p.total_time == Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("greedy_select rules") {
  auto m = telescoping(2.0, Workspace(-20.0, 10.0, 5.0));
  auto s = snap_of(m, {{0, {5.0, 1.0}}, {1, {2.0, 1.0}}, {2, {9.0, 1.0}}});
  CHECK(greedy_select(s, GreedyPolicy::kFifo) == 1);

  // FIFO, Euclidean and SPT disagree here
  auto t = snap_of(m, {{0, {4.0, 0.0}}, {1, {-1.0, 3.0}}, {2, {-2.0, 4.0}}});
  CHECK(greedy_select(t, GreedyPolicy::kFifo) == 2);
  CHECK(greedy_select(t, GreedyPolicy::kEuclidean) == 1);
  CHECK(greedy_select(t, GreedyPolicy::kSpt) == 0);

  auto one = snap_of(m, {{4, {1.0, 2.0}}});
  for (auto g : {GreedyPolicy::kFifo, GreedyPolicy::kSpt,
                 GreedyPolicy::kEuclidean}) {
    CHECK(greedy_select(one, g) == 4);
  }
  auto tie = snap_of(m, {{8, {1.0, 2.0}}, {3, {1.0, 2.0}}});
  CHECK(greedy_select(tie, GreedyPolicy::kSpt) == 3);
  CHECK(greedy_select(tie, GreedyPolicy::kFifo) == 3);

  auto none = snap_of(m, std::vector<SnapshotObject>{});
  CHECK_THROWS_AS(greedy_select(none, GreedyPolicy::kFifo), InputError);
  auto gone = snap_of(m, {{0, {-25.0, 1.0}}});
  CHECK_THROWS_AS(greedy_select(gone, GreedyPolicy::kSpt), NoFeasiblePick);
}

TEST_CASE("spt choice is the argmin of per-object times") {
  auto m = telescoping(2.5);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    auto s = snap_of(m, oracle::random_objects(rng, 8, -3.0, 5.0, 0.0, 5.0));
    double best = oracle::kInf;
    int best_id = -1;
    for (const auto& o : s.objects()) {
      double t = get_pnp_time(m, o.pos).total_or_inf();
      if (t < best) {
        best = t;
        best_id = o.id;
      }
    }
    if (best_id < 0) continue;
    CHECK(greedy_select(s, GreedyPolicy::kSpt) == best_id);
  }
}

TEST_CASE("greedy_order applies the rule at every step") {
  auto m = telescoping(3.0);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40; ++i) {
    auto s = snap_of(m, oracle::random_objects(rng, 7, -2.0, 5.0, 0.0, 5.0));
    for (auto g : {GreedyPolicy::kFifo, GreedyPolicy::kSpt,
                   GreedyPolicy::kEuclidean}) {
      std::vector<int> order = greedy_order(s, g);
      REQUIRE(oracle::is_permutation_of(order, s));
      // replay: each pick is what greedy_select would take among the
      // remaining reachable objects at that time
      double t = 0.0;
      std::vector<SnapshotObject> left(s.objects().begin(), s.objects().end());
      for (int id : order) {
        std::vector<SnapshotObject> live;
        for (const auto& o : left) {
          if (get_pnp_time(m, {o.pos.x - t, o.pos.y}).is_hit()) {
            live.push_back({o.id, {o.pos.x - t, o.pos.y}});
          }
        }
        if (live.empty()) break;
        CHECK(greedy_select(snap_of(m, live), g) == id);
        auto it = std::find_if(left.begin(), left.end(),
                               [&](const auto& o) { return o.id == id; });
        t += get_pnp_time(m, {it->pos.x - t, it->pos.y}).hit().total_time;
        left.erase(it);
      }
    }
  }
}

TEST_CASE("opt_seq enumerates every permutation") {
  auto m = telescoping(3.0);
  std::mt19937_64 rng(1);
  auto s = snap_of(m, oracle::random_objects(rng, 4, 0.0, 5.0, 0.0, 5.0));
  PlanStats st;
  PickPlan p = opt_seq(s, &st);
  CHECK(st.permutations == 24);
  CHECK(st.pnp_calls <= 24 * 4);
  CHECK(p.total_time == Approx(oracle::best_total_recursive(s)).epsilon(1e-12));
  CHECK(validate_plan(p).empty());

  auto big = snap_of(m, oracle::random_objects(rng, 11, 0.0, 5.0, 0.0, 5.0));
  CHECK_THROWS_AS(opt_seq(big), GuardLimit);
}

TEST_CASE("opt_seq_dp equals brute force") {
  auto m = telescoping(3.0);
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 8;  // 2..9
    auto s = snap_of(m, oracle::random_objects(rng, n, 0.0, 5.0, 0.0, 5.0));
    PlanStats st;
    PickPlan dp = opt_seq_dp(s, &st);
    PickPlan bf = opt_seq(s);
    REQUIRE(dp.feasible == bf.feasible);
    CHECK(dp.completed() == bf.completed());
    CHECK(std::abs(dp.elapsed() - bf.elapsed()) <= 1e-9);
    CHECK(st.pnp_calls <= static_cast<std::uint64_t>(n) << (n - 1));
    CHECK(oracle::is_permutation_of(dp.order, s));
    CHECK(validate_plan(dp).empty());
    // the reported times are those of executing the order
    PickPlan again = evaluate_sequence(s, dp.order);
    if (dp.feasible) {
      CHECK(again.total_time == Approx(dp.total_time).epsilon(1e-12));
    }
  }
}

TEST_CASE("opt_seq_dp with unavoidable misses picks as many as possible") {
  auto m = telescoping(2.0);
  // the left object leaves almost at once, the others are easy
  auto s = snap_of(m, {{0, {-4.9, 4.0}}, {1, {2.0, 1.0}}, {2, {3.0, 2.0}}});
  PickPlan dp = opt_seq_dp(s);
  PickPlan bf = opt_seq(s);
  CHECK_FALSE(dp.feasible);
  CHECK(dp.completed() == 2);
  CHECK(dp.completed() == bf.completed());
  CHECK(dp.elapsed() == Approx(bf.elapsed()).epsilon(1e-12));
  CHECK(dp.order.back() == 0);
  CHECK(validate_plan(dp).empty());
  CHECK(opt_seq_dp(snap_of(m, std::vector<SnapshotObject>{})).order.empty());
}

TEST_CASE("spt can lose to the optimal order") {
  // Two objects at the same x: picking the closer one first is worse.
  auto m = telescoping(2.0);
  auto s = snap_of(m, {{0, {1.45, 0.4}}, {1, {1.45, 0.7}}});
  std::vector<int> spt = greedy_order(s, GreedyPolicy::kSpt);
  CHECK(spt.front() == 0);
  PickPlan greedy = evaluate_sequence(s, spt);
  PickPlan best = opt_seq_dp(s);
  CHECK(best.order.front() == 1);
  CHECK(greedy.total_time > best.total_time + 0.1);
}

TEST_CASE("sub_opt_dp basic properties") {
  auto m = telescoping(3.0);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    const int n = 4 + i % 12;
    auto s = snap_of(m, oracle::random_objects(rng, n, 0.0, 5.0, 0.0, 5.0));
    PlanStats st;
    PickPlan p = sub_opt_dp(s, {std::nullopt, 5, GreedyPolicy::kFifo}, &st);
    CHECK(oracle::is_permutation_of(p.order, s));
    CHECK(validate_plan(p).empty());
    for (const SpliceRecord& r : st.splices) {
      if (r.accepted) CHECK(r.after.better_than(r.before));
    }
    // accepted splices only ever improve the plan
    for (std::size_t k = 1; k < st.splices.size(); ++k) {
      const SpliceRecord& prev = st.splices[k - 1];
      PlanKey cur = prev.accepted ? prev.after : prev.before;
      CHECK_FALSE(cur.better_than(st.splices[k].before));
      CHECK_FALSE(st.splices[k].before.better_than(cur));
    }
    PickPlan fifo = evaluate_sequence(s, greedy_order(s, GreedyPolicy::kFifo));
    CHECK_FALSE(PlanKey::of(fifo).better_than(PlanKey::of(p)));
  }
}

TEST_CASE("sub_opt_dp limits") {
  auto m = telescoping(3.0);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    auto s = snap_of(m, oracle::random_objects(rng, 12, 0.0, 5.0, 0.0, 5.0));
    // no sweeps: the initial greedy order
    PickPlan none = sub_opt_dp(s, {0, 9, GreedyPolicy::kFifo});
    CHECK(none.order == greedy_order(s, GreedyPolicy::kFifo));
    // window covering everything: the exact optimum
    PickPlan whole = sub_opt_dp(s, {std::nullopt, 12, GreedyPolicy::kSpt});
    PickPlan dp = opt_seq_dp(s);
    CHECK(whole.completed() == dp.completed());
    CHECK(whole.elapsed() == Approx(dp.elapsed()).epsilon(1e-12));
  }
  auto s = snap_of(m, {{0, {1.0, 1.0}}});
  CHECK_THROWS_AS(sub_opt_dp(s, {std::nullopt, 1, GreedyPolicy::kFifo}),
                  ConfigError);
  CHECK_THROWS_AS(sub_opt_dp(s, {std::nullopt, 25, GreedyPolicy::kFifo}),
                  GuardLimit);
}

TEST_CASE("sub_opt_dp is close to optimal on mid-sized batches") {
  auto m = telescoping(15.0);
  std::mt19937_64 rng(41);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    auto s = snap_of(m, oracle::random_objects(rng, 13, 3.0, 5.0, 0.0, 5.0));
    PickPlan dp = opt_seq_dp(s);
    PickPlan sub = sub_opt_dp(s);
    REQUIRE(dp.feasible);
    REQUIRE(sub.feasible);
    CHECK(sub.total_time >= dp.total_time - 1e-9);
    worst = std::max(worst, sub.total_time / dp.total_time - 1.0);
  }
  CHECK(worst <= 0.03);
}
