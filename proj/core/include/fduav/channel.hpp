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

#ifndef FDUAV_CHANNEL_HPP
#define FDUAV_CHANNEL_HPP

#include <Eigen/Core>

#include "fduav/scenario.hpp"
#include "fduav/variables.hpp"

namespace fduav {

// Which impairments the rate expressions include. The comparison schemes
// differ from the full-duplex design only through these switches.
struct LinkModel {
  bool cross_interference = true;  // uplink users -> downlink users
  bool self_interference = true;   // f_b at the UAV receiver
  double rate_scale = 1.0;         // 0.5 when each direction gets half a slot

  static LinkModel full_duplex() { return {}; }
  static LinkModel ideal_no_interference() { return {false, true, 1.0}; }
  static LinkModel half_duplex() { return {false, false, 0.5}; }
};

// Deterministic channel power gains for one trajectory.
struct GainTables {
  Eigen::MatrixXd downlink;  // h_{b,j}[n], K_D x N
  Eigen::MatrixXd uplink;    // h_{i,b}[n], K_U x N
  Eigen::MatrixXd cross;     // E[g_{i,j}], K_U x K_D; zero if interference is off
};

// Line-of-sight gain beta0 / (|q - w|^2 + H^2).
double los_gain(const Vec2& uav, const Vec2& user, double altitude, double beta0);

// Mean ground-to-ground gain beta0 * max(d, 1 m)^-alpha.
double cross_gain(const Vec2& uplink_user, const Vec2& downlink_user, double beta0,
                  double alpha);

GainTables build_gain_tables(const Scenario& scenario, const Trajectory& trajectory,
                             const LinkModel& model = {});

}  // namespace fduav

#endif  // FDUAV_CHANNEL_HPP
