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

#include "fduav/channel.hpp"

#include <algorithm>
#include <cmath>

namespace fduav {

double los_gain(const Vec2& uav, const Vec2& user, double altitude, double beta0) {
  return beta0 / ((uav - user).squaredNorm() + altitude * altitude);
}

double cross_gain(const Vec2& uplink_user, const Vec2& downlink_user, double beta0,
                  double alpha) {
  const double d = std::max((uplink_user - downlink_user).norm(), kMinGroundDistance);
  return beta0 * std::pow(d, -alpha);
}

GainTables build_gain_tables(const Scenario& scenario, const Trajectory& trajectory,
                             const LinkModel& model) {
  const int kd = scenario.num_downlink();
  const int ku = scenario.num_uplink();
  const int n_slots = trajectory.num_slots();

  GainTables g;
  g.downlink.resize(kd, n_slots);
  g.uplink.resize(ku, n_slots);
  for (int n = 0; n < n_slots; ++n) {
    const Vec2& q = trajectory.slot_position(n);
    for (int j = 0; j < kd; ++j) {
      g.downlink(j, n) = los_gain(q, scenario.downlink_users[j], scenario.altitude, scenario.beta0);
    }
    for (int i = 0; i < ku; ++i) {
      g.uplink(i, n) = los_gain(q, scenario.uplink_users[i], scenario.altitude, scenario.beta0);
    }
  }

  g.cross = Eigen::MatrixXd::Zero(ku, kd);
  if (model.cross_interference) {
    for (int i = 0; i < ku; ++i) {
      for (int j = 0; j < kd; ++j) {
        g.cross(i, j) = cross_gain(scenario.uplink_users[i], scenario.downlink_users[j],
                                   scenario.beta0, scenario.pathloss_alpha);
      }
    }
  }
  return g;
}

}  // namespace fduav
