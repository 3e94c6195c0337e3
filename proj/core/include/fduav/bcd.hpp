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

#ifndef FDUAV_BCD_HPP
#define FDUAV_BCD_HPP

#include <optional>
#include <string>
#include <vector>

#include "fduav/channel.hpp"
#include "fduav/rates.hpp"
#include "fduav/scenario.hpp"
#include "fduav/subproblems.hpp"
#include "fduav/variables.hpp"

namespace fduav {

struct BcdSettings {
  ScaSettings sca;
  int max_outer_iters = 100;

  void validate() const;
};

// Parses the key = value settings format. Unknown keys are an error.
BcdSettings parse_settings(std::string_view text);
BcdSettings load_settings(const std::filesystem::path& path);
std::string format_settings(const BcdSettings& settings);

struct InitialState {
  Schedule schedule;
  Trajectory trajectory;
  PowerProfile power;
};

// Straight-line trajectory, uniform relaxed schedules, full uplink power.
InitialState initialize(const Scenario& scenario);

// Thresholds at 0.5. If two entries of a slot are exactly 0.5, only the
// lower index is kept.
Schedule round_schedule(const Schedule& relaxed);

// Which blocks the alternating loop updates, and under which link model.
struct StagePlan {
  bool downlink_schedule = true;
  bool uplink_schedule = true;
  bool trajectory = true;
  bool power = true;
  LinkModel model;
  // Replaces the straight-line initial trajectory; must be used with
  // trajectory = false when it does not satisfy the endpoint constraints.
  std::optional<Trajectory> fixed_trajectory;
};

struct Solution {
  std::string scheme = "proposed";
  Schedule schedule;           // binary, after rounding
  Schedule relaxed_schedule;   // before rounding
  Trajectory trajectory;
  PowerProfile power;
  std::vector<double> objective_trace;  // relaxed objective after each pass
  double initial_objective = 0.0;
  double final_relaxed_objective = 0.0;
  double final_binary_objective = 0.0;
  int iterations_used = 0;
  RateBreakdown rates;  // evaluated at the binary schedule
};

// Alternating optimization: downlink scheduling, uplink scheduling,
// trajectory, power, until the relative objective gain of a pass drops below
// scenario.tolerance or max_outer_iters passes have run; then rounding.
Solution run(const Scenario& scenario, const BcdSettings& settings,
             const StagePlan& plan = {});

}  // namespace fduav

#endif  // FDUAV_BCD_HPP
