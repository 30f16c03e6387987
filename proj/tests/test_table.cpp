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
#include <filesystem>
#include <memory>
#include <random>
#include <sstream>

#include "pnpseq/pnp_table.hpp"
#include "pnpseq/simd.hpp"

using namespace pnpseq;
using doctest::Approx;

namespace {

const Workspace kWs = Workspace::standard();

std::shared_ptr<const PnpTimeTable> scara_table(GridResolution res = {}) {
  ScaraReach reach(ScaraArm::standard_for(kWs));
  return std::make_shared<PnpTimeTable>(build_pnp_table(reach, kWs, res));
}

}  // namespace

TEST_CASE("nodes hold the direct reach times") {
  ScaraReach reach(ScaraArm::standard_for(kWs));
  PnpTimeTable t = build_pnp_table(reach, kWs, {20, 30});
  CHECK(t.cell_width() == Approx(10.0 / 30));
  CHECK(t.cell_height() == Approx(5.0 / 20));
  for (int r = 0; r < 20; r += 3) {
    for (int c = 0; c < 30; c += 4) {
      Point2 p{t.node_x(c), t.node_y(r)};
      auto direct = reach.reach(p);
      auto looked = t.lookup(p);
      REQUIRE(direct);
      REQUIRE(looked);
      CHECK(looked->go == Approx(direct->go).epsilon(1e-12));
      CHECK(looked->back == Approx(direct->back).epsilon(1e-12));
    }
  }
  CHECK(t.reachable_fraction() == 1.0);
}

TEST_CASE("cell midpoints average their corners") {
  auto t = scara_table({10, 10});
  for (int r = 0; r + 1 < 10; r += 2) {
    for (int c = 0; c + 1 < 10; c += 3) {
      Point2 mid{0.5 * (t->node_x(c) + t->node_x(c + 1)),
                 0.5 * (t->node_y(r) + t->node_y(r + 1))};
      double mean = 0.25 * (t->go_row(r)[c] + t->go_row(r)[c + 1] +
                            t->go_row(r + 1)[c] + t->go_row(r + 1)[c + 1]);
      CHECK(t->lookup(mid)->go == Approx(mean).epsilon(1e-12));
    }
  }
}

TEST_CASE("lookups clamp at the edges and fail outside") {
  auto t = scara_table({10, 10});
  CHECK(t->lookup({-5.0, 0.0})->go == Approx(t->go_row(0)[0]));
  CHECK(t->lookup({5.0, 5.0})->go == Approx(t->go_row(9)[9]));
  CHECK_FALSE(t->lookup({5.1, 1.0}).has_value());
  CHECK_FALSE(t->lookup({0.0, -0.1}).has_value());
}

TEST_CASE("a NaN corner makes the whole cell unreachable") {
  GridResolution res{3, 3};
  std::vector<double> go(9, 1.0), back(9, 1.0);
  go[0] = back[0] = std::nan("");  // node (0, 0)
  PnpTimeTable t(kWs, res, go, back);
  CHECK_FALSE(t.lookup({-5.0, 0.0}).has_value());
  CHECK_FALSE(t.lookup({0.5 * (t.node_x(0) + t.node_x(1)),
                        0.5 * (t.node_y(0) + t.node_y(1))})
                  .has_value());
  auto far = t.lookup({0.5 * (t.node_x(1) + t.node_x(2)),
                       0.5 * (t.node_y(1) + t.node_y(2))});
  REQUIRE(far);
  CHECK(far->go == 1.0);
  CHECK(t.reachable_fraction() == Approx(8.0 / 9.0));
}

// Reach times grow like the square root of the distance from the rest pose,
// so bilinear interpolation is poor close to the drop-off. Agreement is
// checked outside this radius.
constexpr double kDropoffExclusion = 2.5;

TEST_CASE("table lookups agree with direct reach times") {
  auto table = scara_table();
  ScaraReach reach(ScaraArm::standard_for(kWs));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(-5.0, 5.0);
  std::uniform_real_distribution<double> uy(0.0, 5.0);
  int compared = 0;
  double worst = 0.0;
  while (compared < 1000) {
    Point2 p{ux(rng), uy(rng)};
    if (std::hypot(p.x, p.y) < kDropoffExclusion) continue;
    auto a = table->lookup(p);
    auto b = reach.reach(p);
    REQUIRE(a);
    REQUIRE(b);
    ++compared;
    worst = std::max(worst, std::abs(a->go + a->back - b->go - b->back) /
                                (b->go + b->back));
  }
  CHECK(worst <= 0.01);
}

TEST_CASE("table model agrees with direct interception") {
  auto table = scara_table();
  TableModel tab(table);
  DirectModel direct(std::make_shared<ScaraReach>(ScaraArm::standard_for(kWs)),
                     kWs);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ux(-3.0, 5.0);
  std::uniform_real_distribution<double> uy(0.0, 5.0);
  int compared = 0;
  while (compared < 1000) {
    Point2 p{ux(rng), uy(rng)};
    PnpOutcome a = get_pnp_time(tab, p);
    PnpOutcome b = get_pnp_time(direct, p);
    if (!a.is_hit() || !b.is_hit()) continue;
    Point2 pick = b.hit().pick_point;
    if (std::hypot(pick.x, pick.y) < kDropoffExclusion) continue;
    ++compared;
    CHECK(a.hit().total_time == Approx(b.hit().total_time).epsilon(0.01));
  }
}

TEST_CASE("table interception is an exact fixed point of the table") {
  auto table = scara_table({40, 40});
  TableModel tab(table);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ux(-3.0, 5.0);
  std::uniform_real_distribution<double> uy(0.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    Point2 p{ux(rng), uy(rng)};
    PnpOutcome out = get_pnp_time(tab, p);
    if (!out.is_hit()) continue;
    const Hit& h = out.hit();
    auto r = table->lookup(h.pick_point);
    REQUIRE(r);
    CHECK(std::abs(r->go - h.intercept_time) <= 1e-9);
    CHECK(h.total_time == Approx(h.intercept_time + r->back));
  }
}

TEST_CASE("write then read is bit-exact") {
  auto t = scara_table({17, 23});
  std::stringstream ss;
  write_pnp_table(ss, *t);
  PnpTimeTable back = read_pnp_table(ss);
  CHECK(back == *t);
  for (std::size_t i = 0; i < t->go_values().size(); ++i) {
    CHECK(simd::same_bits(back.go_values()[i], t->go_values()[i]));
  }

  auto path = std::filesystem::temp_directory_path() / "pnpseq_table_rt.txt";
  save_pnp_table(path, *t);
  CHECK(load_pnp_table(path) == *t);
  std::filesystem::remove(path);
}

TEST_CASE("bad tables are rejected") {
  ScaraReach reach(ScaraArm::standard_for(kWs));
  CHECK_THROWS_AS(build_pnp_table(reach, kWs, {1, 10}), ConfigError);
  CHECK_THROWS_AS(build_pnp_table(reach, kWs, {10, 1}), ConfigError);
  std::istringstream junk("hello");
  CHECK_THROWS_AS(read_pnp_table(junk), InputError);
  auto t = scara_table({4, 4});
  std::stringstream ss;
  write_pnp_table(ss, *t);
  std::string text = ss.str();
  std::istringstream truncated(text.substr(0, text.size() / 2));
  CHECK_THROWS_AS(read_pnp_table(truncated), InputError);
  CHECK_THROWS_AS(load_pnp_table("/nonexistent/table.txt"), InputError);
}
