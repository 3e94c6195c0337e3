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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fduav/fduav.hpp"

namespace fduav {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("fduav_test_" + name);
  fs::remove_all(dir);
  return dir;
}

// Short route so that solves take milliseconds.
Scenario small_scenario() {
  Scenario s;
  s.downlink_users = {{100, 560}, {300, 440}};
  s.uplink_users = {{150, 520}, {260, 470}};
  s.q_initial = {0, 500};
  s.q_final = {400, 500};
  set_period(s, 10.0);
  validate(s);
  return s;
}

TEST(ValueList, Grammar) {
  EXPECT_EQ(parse_value_list("-170:-110:10"),
            (std::vector<double>{-170, -160, -150, -140, -130, -120, -110}));
  EXPECT_EQ(parse_value_list("30,50,70"), (std::vector<double>{30, 50, 70}));
  EXPECT_EQ(parse_value_list(" 1 , 3:4:0.5"), (std::vector<double>{1, 3, 3.5, 4}));
  EXPECT_EQ(parse_value_list("200:50:-50"), (std::vector<double>{200, 150, 100, 50}));
  EXPECT_EQ(parse_value_list("1:2:5"), (std::vector<double>{1}));
  for (const char* bad : {"", "a", "1,,2", "1:2", "1:2:0", "2:1:1", "1:2:3:4", "1,"}) {
    EXPECT_THROW(parse_value_list(bad), ParseError) << bad;
  }
}

TEST(SweepParamNames, Aliases) {
  EXPECT_EQ(parse_sweep_param("T"), SweepParam::Period);
  EXPECT_EQ(parse_sweep_param("period_T"), SweepParam::Period);
  EXPECT_EQ(parse_sweep_param("fb_db"), SweepParam::SelfInterferenceDb);
  EXPECT_EQ(parse_sweep_param("H"), SweepParam::Altitude);
  EXPECT_EQ(parse_sweep_param("altitude_H"), SweepParam::Altitude);
  EXPECT_THROW(parse_sweep_param("vmax"), ValidationError);
  EXPECT_EQ(to_string(SweepParam::SelfInterferenceDb), "fb_db");
}

TEST(ApplySweepValue, OverridesOneField) {
  const Scenario s = small_scenario();
  EXPECT_EQ(apply_sweep_value(s, SweepParam::Period, 12.0).num_slots, 24);
  EXPECT_NEAR(apply_sweep_value(s, SweepParam::SelfInterferenceDb, -150.0).self_interference,
              1e-15, 1e-29);
  EXPECT_EQ(apply_sweep_value(s, SweepParam::Altitude, 150.0).altitude, 150.0);
  EXPECT_THROW(apply_sweep_value(s, SweepParam::Period, 6.0), ValidationError);
  EXPECT_THROW(apply_sweep_value(s, SweepParam::Altitude, -1.0), ValidationError);
}

TEST(Export, StraightFlightFiles) {
  Scenario s = small_scenario();
  s.q_final = {80, 500};
  set_period(s, 2.0);
  validate(s);
  Solution sol = run_straight_flight(s, {});
  // Pin slot 3 (1-based) to downlink user 2 and nobody on the uplink.
  sol.schedule.downlink.col(2) << 0, 1;
  sol.schedule.uplink.col(2).setZero();
  const fs::path dir = scratch_dir("export");
  export_solution(sol, s, dir);

  const auto traj = lines(slurp(dir / "trajectory.csv"));
  ASSERT_EQ(traj.size(), 6u);
  EXPECT_EQ(traj[0], "n,t_seconds,x_m,y_m");
  EXPECT_EQ(traj[1], "0,0,0,500");
  EXPECT_EQ(traj[3], "2,1,40,500");
  EXPECT_EQ(traj[5], "4,2,80,500");

  const auto sched = lines(slurp(dir / "schedule.csv"));
  ASSERT_EQ(sched.size(), 5u);
  EXPECT_EQ(sched[0], "n,downlink_user,uplink_user,xd_1,xd_2,xu_1,xu_2");
  EXPECT_EQ(sched[3].substr(0, 7), "3,2,-1,");

  EXPECT_EQ(lines(slurp(dir / "power.csv")).size(), 1u + 2u * 4u);
  EXPECT_EQ(lines(slurp(dir / "rates.csv")).size(), 5u);
  EXPECT_EQ(lines(slurp(dir / "rates.csv"))[0], "n,Rd_weighted,Ru_weighted");
  EXPECT_TRUE(fs::exists(dir / "solution.json"));
  fs::remove_all(dir);
}

TEST(Export, UnwritableDirectoryIsIoError) {
  const Scenario s = small_scenario();
  const Solution sol = run_straight_flight(s, {});
  const fs::path file = scratch_dir("blocker");
  std::ofstream(file) << "x";
  EXPECT_THROW(export_solution(sol, s, file / "sub"), IoError);
  fs::remove(file);
}

TEST(SolutionJson, RoundTripIsBitwise) {
  const Scenario s = small_scenario();
  const Solution a = run_proposed(s, {});
  const Solution b = solution_from_json(solution_to_json(a));
  EXPECT_EQ(solution_to_json(b), solution_to_json(a));
  EXPECT_EQ(b.scheme, a.scheme);
  EXPECT_EQ(b.schedule.downlink, a.schedule.downlink);
  EXPECT_EQ(b.relaxed_schedule.uplink, a.relaxed_schedule.uplink);
  EXPECT_EQ(b.schedule.mode, ScheduleMode::Binary);
  EXPECT_EQ(b.relaxed_schedule.mode, ScheduleMode::Relaxed);
  EXPECT_EQ(b.trajectory.waypoints, a.trajectory.waypoints);
  EXPECT_EQ(b.power.watts, a.power.watts);
  EXPECT_EQ(b.objective_trace, a.objective_trace);
  EXPECT_EQ(b.initial_objective, a.initial_objective);
  EXPECT_EQ(b.final_binary_objective, a.final_binary_objective);
  EXPECT_EQ(b.iterations_used, a.iterations_used);
  EXPECT_EQ(b.rates.downlink, a.rates.downlink);
  EXPECT_EQ(b.rates.uplink_per_slot, a.rates.uplink_per_slot);
}

TEST(SolutionJson, Errors) {
  EXPECT_THROW(solution_from_json("{"), ParseError);
  EXPECT_THROW(solution_from_json("{\"format\": \"other/1\"}"), ParseError);
  EXPECT_THROW(load_solution("/nonexistent/fduav/solution.json"), IoError);
}

TEST(CheckSolution, FlagsTampering) {
  const Scenario s = small_scenario();
  const Solution good = run_proposed(s, {});
  EXPECT_TRUE(check_solution(good, s).empty());

  Solution bad = good;
  bad.trajectory.waypoints[3] += Vec2(0, 200);
  EXPECT_FALSE(check_solution(bad, s).empty());

  bad = good;
  bad.power.watts(0, 0) = 1.0;
  EXPECT_FALSE(check_solution(bad, s).empty());

  bad = good;
  bad.objective_trace.push_back(bad.objective_trace.back() - 1.0);
  EXPECT_FALSE(check_solution(bad, s).empty());

  bad = good;
  bad.schedule.downlink.col(0).setOnes();
  EXPECT_FALSE(check_solution(bad, s).empty());

  const Solution hover = run_static(s, {});
  EXPECT_TRUE(check_solution(hover, s).empty());
}

TEST(Sweep, SortedRowsErrorRowsAndDeterministicSummary) {
  SweepSpec spec;
  spec.param = SweepParam::Period;
  spec.values = {12, 6, 10};
  spec.schemes = {Scheme::HalfDuplex, Scheme::Proposed};
  spec.base = small_scenario();
  spec.output_dir = scratch_dir("sweep1");
  spec.threads = 1;
  const auto rows = run_sweep(spec);

  ASSERT_EQ(rows.size(), 6u);
  const std::vector<Scheme> want_scheme{Scheme::Proposed, Scheme::Proposed, Scheme::Proposed,
                                        Scheme::HalfDuplex, Scheme::HalfDuplex,
                                        Scheme::HalfDuplex};
  const std::vector<double> want_value{6, 10, 12, 6, 10, 12};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(rows[k].scheme, want_scheme[k]);
    EXPECT_EQ(rows[k].value, want_value[k]);
    EXPECT_EQ(rows[k].ok, rows[k].value != 6) << rows[k].error;
  }
  EXPECT_NE(rows[0].error.find("unreachable"), std::string::npos);
  for (std::size_t k : {1u, 2u}) EXPECT_GT(rows[k].binary_objective, rows[k + 3].binary_objective);

  const auto summary = lines(slurp(spec.output_dir / "summary.csv"));
  ASSERT_EQ(summary.size(), 7u);
  EXPECT_EQ(summary[0],
            "scheme,param,value,status,binary_objective,relaxed_objective,iterations,error");
  EXPECT_EQ(summary[1].rfind("proposed,T,6,error,,,,endpoints unreachable", 0), 0u) << summary[1];
  EXPECT_EQ(summary[4].rfind("hd,T,6,error,,,,endpoints unreachable", 0), 0u) << summary[4];
  EXPECT_EQ(summary[2].rfind("proposed,T,10,ok,", 0), 0u) << summary[2];
  EXPECT_EQ(lines(slurp(spec.output_dir / "timings.csv")).size(), 7u);

  // Every emitted cell passes the validator.
  for (const auto& [scheme, k] : {std::pair{"proposed", 1}, {"proposed", 2}, {"hd", 1}, {"hd", 2}}) {
    const fs::path cell = spec.output_dir / "cells" / (std::string(scheme) + "_" + std::to_string(k));
    const Solution sol = load_solution(cell / "solution.json");
    const Scenario sc = apply_sweep_value(spec.base, spec.param, want_value[k]);
    EXPECT_TRUE(check_solution(sol, sc).empty()) << cell;
  }
  EXPECT_FALSE(fs::exists(spec.output_dir / "cells" / "proposed_0"));

  SweepSpec again = spec;
  again.output_dir = scratch_dir("sweep2");
  again.threads = 3;
  run_sweep(again);
  EXPECT_EQ(slurp(again.output_dir / "summary.csv"), slurp(spec.output_dir / "summary.csv"));
  EXPECT_EQ(slurp(again.output_dir / "cells" / "hd_2" / "solution.json"),
            slurp(spec.output_dir / "cells" / "hd_2" / "solution.json"));
  fs::remove_all(spec.output_dir);
  fs::remove_all(again.output_dir);
}

TEST(Sweep, RejectsEmptyLists) {
  SweepSpec spec;
  spec.base = small_scenario();
  spec.schemes = {Scheme::Proposed};
  EXPECT_THROW(run_sweep(spec), ValidationError);
  spec.values = {10};
  spec.schemes.clear();
  EXPECT_THROW(run_sweep(spec), ValidationError);
}

TEST(Sweep, DuplicateCellsRunOnce) {
  SweepSpec spec;
  spec.param = SweepParam::Altitude;
  spec.values = {100, 100};
  spec.schemes = {Scheme::StraightFlight, Scheme::StraightFlight};
  spec.base = small_scenario();
  EXPECT_EQ(run_sweep(spec).size(), 1u);
}

TEST(Sweep, ThreadCountFromEnvironment) {
  ::unsetenv("FDUAV_THREADS");
  EXPECT_EQ(sweep_threads_from_env(4), 4);
  ::setenv("FDUAV_THREADS", "3", 1);
  EXPECT_EQ(sweep_threads_from_env(4), 3);
  ::setenv("FDUAV_THREADS", "zero", 1);
  EXPECT_EQ(sweep_threads_from_env(4), 4);
  ::setenv("FDUAV_THREADS", "0", 1);
  EXPECT_EQ(sweep_threads_from_env(4), 4);
  ::unsetenv("FDUAV_THREADS");
}

}  // namespace
}  // namespace fduav
