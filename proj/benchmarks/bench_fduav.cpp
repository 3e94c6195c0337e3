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

#include <benchmark/benchmark.h>

#include "fduav/fduav.hpp"

namespace {

using fduav::Scenario;
using fduav::Vec2;

Scenario desk(double period) {
  Scenario s;
  s.downlink_users = {{250, 650}, {750, 350}};
  s.uplink_users = {{350, 550}, {650, 450}};
  fduav::set_period(s, period);
  fduav::validate(s);
  return s;
}

void BM_Evaluate(benchmark::State& state) {
  const Scenario s = desk(static_cast<double>(state.range(0)));
  const auto init = fduav::initialize(s);
  const auto gains = fduav::build_gain_tables(s, init.trajectory);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fduav::evaluate(init.schedule, init.power, gains, s));
  }
  state.SetItemsProcessed(state.iterations() * s.num_slots);
}
BENCHMARK(BM_Evaluate)->Arg(30)->Arg(150);

void BM_ProjectSpeedChain(benchmark::State& state) {
  const Scenario s = desk(static_cast<double>(state.range(0)));
  fduav::Trajectory target = fduav::straight_line(s);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> noise(0.0, 40.0);
  for (auto& q : target.waypoints) q += Vec2(noise(rng), noise(rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fduav::project_speed_chain(s, target, 200));
  }
}
BENCHMARK(BM_ProjectSpeedChain)->Arg(30)->Arg(150);

void BM_SolveTrajectory(benchmark::State& state) {
  const Scenario s = desk(30.0);
  auto init = fduav::initialize(s);
  auto gains = fduav::build_gain_tables(s, init.trajectory);
  init.schedule = fduav::solve_downlink_schedule(s, gains, init.schedule, init.power);
  init.schedule = fduav::solve_uplink_schedule(s, gains, init.schedule, init.power, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fduav::solve_trajectory(s, init.schedule, init.power, init.trajectory, {}));
  }
}
BENCHMARK(BM_SolveTrajectory)->Unit(benchmark::kMillisecond);

void BM_RunScheme(benchmark::State& state) {
  const Scenario s = desk(30.0);
  const auto scheme = static_cast<fduav::Scheme>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fduav::run_scheme(scheme, s, {}));
  }
  state.SetLabel(std::string(fduav::to_string(scheme)));
}
BENCHMARK(BM_RunScheme)
    ->DenseRange(0, static_cast<int>(fduav::kAllSchemes.size()) - 1)
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
