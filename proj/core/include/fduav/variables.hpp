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

#ifndef FDUAV_VARIABLES_HPP
#define FDUAV_VARIABLES_HPP

#include <vector>

#include <Eigen/Core>

#include "fduav/scenario.hpp"

namespace fduav {

// Horizontal UAV waypoints q[0..N]. Slot n (0-based) is served from
// waypoint n + 1, so q[0] only anchors the first speed constraint.
struct Trajectory {
  std::vector<Vec2> waypoints;

  int num_slots() const { return static_cast<int>(waypoints.size()) - 1; }
  const Vec2& slot_position(int slot) const { return waypoints[slot + 1]; }
};

// Constant-speed line from q_I to q_F with N + 1 equispaced points.
Trajectory straight_line(const Scenario& scenario);

// Largest amount by which any per-slot step exceeds vmax * delta (<= 0 when
// all speed constraints hold).
double max_speed_violation(const Scenario& scenario, const Trajectory& trajectory);

// Throws ValidationError unless the endpoints match q_I/q_F and every step
// respects the speed limit, both within kFeasTol.
void check_trajectory(const Scenario& scenario, const Trajectory& trajectory);

enum class ScheduleMode { Relaxed, Binary };

// x_j^d[n] (downlink, K_D x N) and x_i^u[n] (uplink, K_U x N).
struct Schedule {
  Eigen::MatrixXd downlink;
  Eigen::MatrixXd uplink;
  ScheduleMode mode = ScheduleMode::Relaxed;

  int num_slots() const { return static_cast<int>(downlink.cols()); }
};

Schedule uniform_schedule(const Scenario& scenario);

// Throws ValidationError if entries leave [0,1] (or {0,1} in binary mode) or
// any per-slot column sum exceeds 1 (+1e-9 when relaxed).
void check_schedule(const Schedule& schedule);

// p_i[n] in Watts, K_U x N.
struct PowerProfile {
  Eigen::MatrixXd watts;
};

PowerProfile full_power(const Scenario& scenario);

// Throws ValidationError unless 0 <= p <= P_max everywhere.
void check_power(const Scenario& scenario, const PowerProfile& power);

}  // namespace fduav

#endif  // FDUAV_VARIABLES_HPP
