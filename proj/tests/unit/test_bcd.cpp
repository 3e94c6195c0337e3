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

#include <random>

#include <gtest/gtest.h>

#include "fduav/fduav.hpp"
#include "oracles.hpp"

namespace fduav {
namespace {

using testing::random_scenario;

Scenario desk_default() {
  Scenario s;
  s.downlink_users = {{250, 650}, {750, 350}};
  s.uplink_users = {{350, 550}, {650, 450}};
  validate(s);
  return s;
}

TEST(Initialize, StraightLineUniformScheduleFullPower) {
  Scenario s = desk_default();
  s.uplink_users = {{1, 1}, {2, 2}, {3, 3}, {4, 4}};
  const auto init = initialize(s);
  ASSERT_EQ(init.trajectory.waypoints.size(), 61u);
  for (int n = 0; n <= 60; ++n) {
    EXPECT_NEAR(init.trajectory.waypoints[n].x(), 1000.0 * n / 60.0, 1e-9);
    EXPECT_EQ(init.trajectory.waypoints[n].y(), 500.0);
  }
  EXPECT_EQ(init.trajectory.waypoints.back(), s.q_final);
  EXPECT_TRUE((init.schedule.uplink.array() == 0.25).all());
  EXPECT_TRUE((init.schedule.downlink.array() == 0.5).all());
  EXPECT_TRUE((init.power.watts.array() == 0.1).all());
  EXPECT_EQ(init.schedule.mode, ScheduleMode::Relaxed);
}

TEST(Initialize, RejectsUnreachableEndpoints) {
  Scenario s = desk_default();
  set_period(s, 10.0);
  EXPECT_THROW(initialize(s), ValidationError);
}

TEST(RoundSchedule, ThresholdAndTies) {
  Schedule r;
  r.downlink.resize(2, 4);
  r.downlink << 0.5, 0.49, 0.5, 0.2,  //
      0.5, 0.51, 0.3, 0.2;
  r.uplink.resize(1, 4);
  r.uplink << 0.5, 0.49, 1.0, 0.0;
  const Schedule b = round_schedule(r);
  EXPECT_EQ(b.mode, ScheduleMode::Binary);
  Eigen::MatrixXd want_d(2, 4);
  want_d << 1, 0, 1, 0,  //
      0, 1, 0, 0;
  EXPECT_EQ(b.downlink, want_d);
  Eigen::MatrixXd want_u(1, 4);
  want_u << 1, 0, 1, 0;
  EXPECT_EQ(b.uplink, want_u);
  EXPECT_NO_THROW(check_schedule(b));
}

TEST(Run, LooseToleranceStopsAfterOnePass) {
  Scenario s = desk_default();
  s.tolerance = 1.0;
  const Solution sol = run(s, BcdSettings{});
  EXPECT_EQ(sol.iterations_used, 1);
  EXPECT_EQ(sol.objective_trace.size(), 1u);
}

TEST(Run, DeskDefaultConvergesMonotonically) {
  const Scenario s = desk_default();
  const Solution sol = run(s, BcdSettings{});
  EXPECT_LE(sol.iterations_used, 50);
  EXPECT_GE(sol.objective_trace.front(), sol.initial_objective);
  for (std::size_t r = 1; r < sol.objective_trace.size(); ++r) {
    EXPECT_GE(sol.objective_trace[r], sol.objective_trace[r - 1] - 1e-9);
  }
  EXPECT_LE(sol.final_binary_objective, sol.final_relaxed_objective + 1e-9);
  EXPECT_NO_THROW(check_trajectory(s, sol.trajectory));
  EXPECT_NO_THROW(check_schedule(sol.schedule));
  EXPECT_NO_THROW(check_power(s, sol.power));
  EXPECT_EQ(sol.schedule.mode, ScheduleMode::Binary);
  EXPECT_NEAR(sol.final_binary_objective,
              testing::total_value(s, sol.trajectory, sol.schedule, sol.power), 1e-9);
}

TEST(Run, Deterministic) {
  std::mt19937_64 rng(71);
  const Scenario s = random_scenario(rng, 2, 2, 20);
  const Solution a = run(s, BcdSettings{});
  const Solution b = run(s, BcdSettings{});
  EXPECT_EQ(solution_to_json(a), solution_to_json(b));
  EXPECT_EQ(a.objective_trace, b.objective_trace);
}

TEST(Run, ApproachesDownlinkUserUnderStrongCrossInterference) {
  Scenario s;
  s.downlink_users = {{30, 120}};
  s.uplink_users = {{40, 110}};
  s.q_initial = {0, 0};
  s.q_final = {60, 0};
  s.num_slots = 4;
  s.period = 2.0;
  validate(s);
  const Solution sol = run(s, BcdSettings{});
  const Trajectory line = straight_line(s);
  EXPECT_LT(testing::min_distance(sol.trajectory, s.downlink_users[0]),
            testing::min_distance(line, s.downlink_users[0]) - 1.0);
}

TEST(Run, RandomInstancesHoldInvariants) {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 5; ++trial) {
    const Scenario s = random_scenario(rng, 2, 2, 20);
    const Solution sol = run(s, BcdSettings{});
    for (std::size_t r = 1; r < sol.objective_trace.size(); ++r) {
      EXPECT_GE(sol.objective_trace[r], sol.objective_trace[r - 1] - 1e-9);
    }
    EXPECT_LE(sol.final_binary_objective, sol.final_relaxed_objective + 1e-9);
    EXPECT_NO_THROW(check_trajectory(s, sol.trajectory));
  }
}

TEST(Settings, ParseFormatRoundTrip) {
  BcdSettings s;
  s.max_outer_iters = 7;
  s.sca.initial_step = 12.5;
  s.sca.vertex_check = false;
  s.sca.stationarity_tol = 3e-7;
  const BcdSettings t = parse_settings(format_settings(s));
  EXPECT_EQ(format_settings(t), format_settings(s));
  EXPECT_EQ(t.max_outer_iters, 7);
  EXPECT_EQ(t.sca.initial_step, 12.5);
  EXPECT_FALSE(t.sca.vertex_check);
}

TEST(Settings, Errors) {
  EXPECT_THROW(parse_settings("speed = 3\n"), ParseError);
  EXPECT_THROW(parse_settings("max_outer_iters = 2.5\n"), ParseError);
  EXPECT_THROW(parse_settings("max_outer_iters = 0\n"), ValidationError);
  EXPECT_THROW(parse_settings("inner_tolerance = 2\n"), ValidationError);
  EXPECT_THROW(load_settings("/nonexistent/fduav.settings"), IoError);
}

}  // namespace
}  // namespace fduav
