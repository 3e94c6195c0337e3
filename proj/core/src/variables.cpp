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

#include "fduav/variables.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fduav {

Trajectory straight_line(const Scenario& scenario) {
  const int n_slots = scenario.num_slots;
  Trajectory t;
  t.waypoints.reserve(n_slots + 1);
  for (int n = 0; n <= n_slots; ++n) {
    const double frac = static_cast<double>(n) / n_slots;
    t.waypoints.push_back(scenario.q_initial + frac * (scenario.q_final - scenario.q_initial));
  }
  // q_I + (q_F - q_I) can miss q_F in the last bit.
  t.waypoints.back() = scenario.q_final;
  return t;
}

double max_speed_violation(const Scenario& scenario, const Trajectory& trajectory) {
  double worst = -scenario.max_step();
  for (std::size_t n = 1; n < trajectory.waypoints.size(); ++n) {
    const double step = (trajectory.waypoints[n] - trajectory.waypoints[n - 1]).norm();
    worst = std::max(worst, step - scenario.max_step());
  }
  return worst;
}

void check_trajectory(const Scenario& scenario, const Trajectory& trajectory) {
  if (trajectory.num_slots() != scenario.num_slots) {
    throw ValidationError("trajectory has " + std::to_string(trajectory.num_slots()) +
                          " slots, scenario has " + std::to_string(scenario.num_slots));
  }
  if ((trajectory.waypoints.front() - scenario.q_initial).norm() > kFeasTol) {
    throw ValidationError("trajectory does not start at q_initial");
  }
  if ((trajectory.waypoints.back() - scenario.q_final).norm() > kFeasTol) {
    throw ValidationError("trajectory does not end at q_final");
  }
  const double violation = max_speed_violation(scenario, trajectory);
  if (violation > kFeasTol) {
    std::ostringstream msg;
    msg << "trajectory exceeds vmax * delta by " << violation << " m";
    throw ValidationError(msg.str());
  }
}

Schedule uniform_schedule(const Scenario& scenario) {
  Schedule s;
  s.downlink = Eigen::MatrixXd::Constant(scenario.num_downlink(), scenario.num_slots,
                                         1.0 / scenario.num_downlink());
  s.uplink = Eigen::MatrixXd::Constant(scenario.num_uplink(), scenario.num_slots,
                                       1.0 / scenario.num_uplink());
  s.mode = ScheduleMode::Relaxed;
  return s;
}

namespace {

void check_block(const Eigen::MatrixXd& x, ScheduleMode mode, const char* name) {
  const double slack = mode == ScheduleMode::Relaxed ? 1e-9 : 0.0;
  for (Eigen::Index n = 0; n < x.cols(); ++n) {
    for (Eigen::Index k = 0; k < x.rows(); ++k) {
      const double v = x(k, n);
      if (mode == ScheduleMode::Binary ? (v != 0.0 && v != 1.0) : !(v >= 0.0 && v <= 1.0)) {
        throw ValidationError(std::string(name) + " schedule entry out of range at slot " +
                              std::to_string(n));
      }
    }
    if (x.col(n).sum() > 1.0 + slack) {
      throw ValidationError(std::string(name) + " schedule assigns more than one user in slot " +
                            std::to_string(n));
    }
  }
}

}  // namespace

void check_schedule(const Schedule& schedule) {
  if (schedule.downlink.cols() != schedule.uplink.cols()) {
    throw ValidationError("downlink and uplink schedules cover different slot counts");
  }
  check_block(schedule.downlink, schedule.mode, "downlink");
  check_block(schedule.uplink, schedule.mode, "uplink");
}

PowerProfile full_power(const Scenario& scenario) {
  return {Eigen::MatrixXd::Constant(scenario.num_uplink(), scenario.num_slots,
                                    scenario.max_uplink_power)};
}

void check_power(const Scenario& scenario, const PowerProfile& power) {
  if (power.watts.rows() != scenario.num_uplink() || power.watts.cols() != scenario.num_slots) {
    throw ValidationError("power profile has wrong dimensions");
  }
  for (Eigen::Index k = 0; k < power.watts.size(); ++k) {
    const double p = power.watts.data()[k];
    if (!(p >= 0.0 && p <= scenario.max_uplink_power)) {
      throw ValidationError("uplink power outside [0, P_max]");
    }
  }
}

}  // namespace fduav
