// Copyright 2026 The fduav Authors
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
#include <random>

#include <gtest/gtest.h>

#include "fduav/fduav.hpp"
#include "oracles.hpp"

namespace fduav {
namespace {

using testing::random_feasible_trajectory;
using testing::random_power;
using testing::random_relaxed_schedule;
using testing::random_scenario;

// One slot, one downlink user straight below the UAV (h = beta0 / H^2), and
// one uplink user whose cross gain is set through its distance.
struct SingleSlot {
  Scenario s;
  Schedule a;
  PowerProfile p;
  Trajectory t;

  explicit SingleSlot(double uplink_distance = 100.0) {
    s.downlink_users = {{0, 0}};
    s.uplink_users = {{uplink_distance, 0}};
    s.q_initial = {0, 0};
    s.q_final = {0, 0};
    s.num_slots = 1;
    s.period = 0.5;
    validate(s);
    a.downlink = Eigen::MatrixXd::Ones(1, 1);
    a.uplink = Eigen::MatrixXd::Zero(1, 1);
    p = full_power(s);
    t = straight_line(s);
  }
  GainTables gains() const { return build_gain_tables(s, t); }
};

TEST(DownlinkRate, NoUplinkScheduled) {
  SingleSlot c;
  const auto g = c.gains();
  ASSERT_NEAR(g.downlink(0, 0), 1e-10, 1e-24);
  // SINR = 0.1 * 1e-10 / 1e-14 = 1e3.
  EXPECT_NEAR(downlink_rate(0, 0, c.a, c.p, g, c.s), std::log2(1001.0), 1e-12);
  EXPECT_NEAR(downlink_rate(0, 0, c.a, c.p, g, c.s), 9.967226258835993, 1e-12);
}

TEST(DownlinkRate, InterferenceDrivesRateToZero) {
  double prev = INFINITY;
  for (double d = 1000.0; d >= 1.0; d /= 2.0) {
    SingleSlot c(d);
    c.a.uplink(0, 0) = 1.0;
    c.s.uav_tx_power = 1e-6;
    const double r = downlink_rate(0, 0, c.a, c.p, c.gains(), c.s);
    EXPECT_LT(r, prev);
    EXPECT_GE(r, 0.0);
    prev = r;
  }
  EXPECT_LT(prev, 1e-6);
}

TEST(DownlinkRate, NineNoisePowersOfInterferenceCutSinrTenfold) {
  SingleSlot c;
  c.a.uplink(0, 0) = 1.0;
  // g * p = 1e-6 * d^-3 * 0.1 = 9e-14  ->  d^3 = 1e-7 / 9e-14.
  c.s.uplink_users[0] = Vec2(std::cbrt(1e-7 / 9e-14), 0.0);
  const auto g = c.gains();
  ASSERT_NEAR(g.cross(0, 0) * 0.1, 9e-14, 1e-25);
  EXPECT_NEAR(downlink_rate(0, 0, c.a, c.p, g, c.s), std::log2(1.0 + 100.0), 1e-9);
}

TEST(UplinkRate, Examples) {
  SingleSlot c;
  c.s.uplink_users[0] = Vec2(0, 0);
  const auto g = c.gains();
  PowerProfile zero = c.p;
  zero.watts.setZero();
  EXPECT_EQ(uplink_rate(0, 0, zero, g, c.s), 0.0);
  EXPECT_NEAR(uplink_rate(0, 0, c.p, g, c.s), std::log2(1.0 + 1e-11 / 1.1e-13), 1e-12);
  EXPECT_NEAR(uplink_rate(0, 0, c.p, g, c.s), 6.522, 5e-4);

  Scenario quiet = c.s;
  quiet.self_interference = db_to_linear(-150.0);
  const double r150 = uplink_rate(0, 0, c.p, g, quiet);
  const double r0 = uplink_rate(0, 0, c.p, g, quiet, LinkModel{true, false, 1.0});
  // At SINR = 1e3 (the best this setup allows) the -150 dB residual still
  // costs 1.4 % of the rate. What holds for every SINR is that the loss is
  // below log2(1 + f_b / sigma^2) bits.
  EXPECT_LT(r0 - r150, std::log2(1.0 + quiet.self_interference / quiet.noise_power));
  EXPECT_GT(r0, r150);
  EXPECT_NEAR((r0 - r150) / r0, 0.0138, 1e-4);
}

TEST(Objective, ZeroScheduleIsZero) {
  std::mt19937_64 rng(21);
  const Scenario s = random_scenario(rng, 2, 2, 6);
  Schedule a = uniform_schedule(s);
  a.downlink.setZero();
  a.uplink.setZero();
  EXPECT_EQ(objective(a, straight_line(s), full_power(s), s).weighted_objective, 0.0);
}

TEST(Objective, SingleScheduledDownlinkEqualsItsRate) {
  SingleSlot c;
  const auto g = c.gains();
  EXPECT_DOUBLE_EQ(objective(c.a, c.t, c.p, c.s).weighted_objective,
                   downlink_rate(0, 0, c.a, c.p, g, c.s));
}

TEST(Objective, MatchesTermwiseOracle) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const Scenario s = random_scenario(rng, 2, 2, 4);
    const Trajectory t = random_feasible_trajectory(rng, s);
    const Schedule a = random_relaxed_schedule(rng, s);
    const PowerProfile p = random_power(rng, s);
    for (const LinkModel& m : {LinkModel::full_duplex(), LinkModel::ideal_no_interference(),
                               LinkModel::half_duplex()}) {
      const auto r = objective(a, t, p, s, m);
      const double ref = testing::total_value(s, t, a, p, testing::oracle_model(m));
      EXPECT_NEAR(r.weighted_objective, ref, 1e-12 * std::max(1.0, ref));
      for (int n = 0; n < 4; ++n) {
        EXPECT_NEAR(r.downlink_per_slot(n) + r.uplink_per_slot(n),
                    testing::slot_value(s, t, a, p, n, testing::oracle_model(m)), 1e-11);
      }
    }
  }
}

TEST(Objective, HalfDuplexHalvesInterferenceFreeRates) {
  std::mt19937_64 rng(23);
  const Scenario s = random_scenario(rng, 2, 2, 5);
  const Trajectory t = random_feasible_trajectory(rng, s);
  const Schedule a = random_relaxed_schedule(rng, s);
  const PowerProfile p = random_power(rng, s);
  const auto hd = objective(a, t, p, s, LinkModel::half_duplex());
  const auto free = objective(a, t, p, s, LinkModel{false, false, 1.0});
  EXPECT_TRUE(hd.downlink.isApprox(0.5 * free.downlink, 1e-14));
  EXPECT_TRUE(hd.uplink.isApprox(0.5 * free.uplink, 1e-14));
  EXPECT_NEAR(hd.weighted_objective, 0.5 * free.weighted_objective, 1e-12);
}

TEST(Objective, MonotoneInParameters) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    Scenario s = random_scenario(rng, 2, 2, 6);
    const Trajectory t = random_feasible_trajectory(rng, s);
    const Schedule a = random_relaxed_schedule(rng, s);
    const PowerProfile p = random_power(rng, s);
    const double base = objective(a, t, p, s).weighted_objective;

    Scenario louder = s;
    louder.uav_tx_power *= 2.0;
    EXPECT_GE(objective(a, t, p, louder).weighted_objective, base);

    Scenario noisier = s;
    noisier.self_interference *= 10.0;
    EXPECT_LE(objective(a, t, p, noisier).weighted_objective, base);

    Scenario higher = s;
    higher.altitude += 50.0;
    EXPECT_LE(objective(a, t, p, higher).weighted_objective, base);

    GainTables g = build_gain_tables(s, t);
    g.uplink *= 1.5;
    EXPECT_GE(evaluate(a, p, g, s).weighted_objective, base);
  }
}

TEST(Objective, LinearInDownlinkSchedule) {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Scenario s = random_scenario(rng, 3, 2, 5);
    const Trajectory t = random_feasible_trajectory(rng, s);
    const PowerProfile p = random_power(rng, s);
    Schedule a = random_relaxed_schedule(rng, s);
    Schedule b = random_relaxed_schedule(rng, s);
    b.uplink = a.uplink;
    const double lambda = u(rng);
    Schedule mix = a;
    mix.downlink = lambda * a.downlink + (1.0 - lambda) * b.downlink;
    const double fa = objective(a, t, p, s).weighted_objective;
    const double fb = objective(b, t, p, s).weighted_objective;
    const double fm = objective(mix, t, p, s).weighted_objective;
    EXPECT_NEAR(fm, lambda * fa + (1.0 - lambda) * fb, 1e-10 * std::max(1.0, fm));
  }
}

TEST(Log2, StableForTinySinr) {
  EXPECT_NEAR(log2_1p(1e-18), 1e-18 / std::numbers::ln2, 1e-30);
  EXPECT_EQ(log2_1p(0.0), 0.0);
}

}  // namespace
}  // namespace fduav
