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

#ifndef FDUAV_EXPERIMENTS_HPP
#define FDUAV_EXPERIMENTS_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fduav/baselines.hpp"
#include "fduav/bcd.hpp"
#include "fduav/scenario.hpp"

namespace fduav {

// ---- Solution files ------------------------------------------------------

// JSON document holding every Solution field. Doubles are written with
// shortest round-trip precision, so parsing returns a bitwise-equal value.
std::string solution_to_json(const Solution& solution);
Solution solution_from_json(std::string_view text);
Solution load_solution(const std::filesystem::path& path);

// Writes trajectory.csv, schedule.csv, power.csv, rates.csv and
// solution.json into `dir` (created if missing). Throws IoError.
void export_solution(const Solution& solution, const Scenario& scenario,
                     const std::filesystem::path& dir);

// Returns one message per violated Solution invariant; empty when valid.
std::vector<std::string> check_solution(const Solution& solution, const Scenario& scenario);

// ---- Sweeps --------------------------------------------------------------

enum class SweepParam { Period, SelfInterferenceDb, Altitude };

std::string_view to_string(SweepParam param);
// Accepts T|period_T, fb_db|self_interference_fb_db, H|altitude_H.
SweepParam parse_sweep_param(std::string_view name);

// Comma-separated items, each a number or an inclusive start:stop:step
// range, e.g. "-170:-110:10" or "30,50,70".
std::vector<double> parse_value_list(std::string_view text);

// Copy of `base` with the swept parameter set to `value`, validated.
Scenario apply_sweep_value(const Scenario& base, SweepParam param, double value);

struct SweepSpec {
  SweepParam param = SweepParam::Period;
  std::vector<double> values;
  std::vector<Scheme> schemes;
  Scenario base;
  BcdSettings settings;
  std::filesystem::path output_dir;  // empty: nothing written
  int threads = 1;
};

struct SweepRow {
  Scheme scheme = Scheme::Proposed;
  double value = 0.0;
  bool ok = false;
  double binary_objective = 0.0;
  double relaxed_objective = 0.0;
  int iterations = 0;
  double wall_seconds = 0.0;
  std::string error;
};

// Runs every (scheme, value) cell, rows sorted by scheme then value. A
// failing cell becomes an error row and the sweep continues. With an output
// directory, writes summary.csv (deterministic), timings.csv, and
// cells/<scheme>_<k>/ with each cell's exported solution.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Worker count from FDUAV_THREADS, defaulting to `fallback`.
int sweep_threads_from_env(int fallback = 1);

}  // namespace fduav

#endif  // FDUAV_EXPERIMENTS_HPP
