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

#include "fduav/rates.hpp"

namespace fduav {

double downlink_interference(int j, int slot, const Schedule& schedule,
                             const PowerProfile& power, const GainTables& gains,
                             const Scenario& scenario) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < gains.cross.rows(); ++i) {
    total += schedule.uplink(i, slot) * gains.cross(i, j) * power.watts(i, slot);
  }
  return total + scenario.noise_power;
}

double uplink_noise(const Scenario& scenario, const LinkModel& model) {
  return (model.self_interference ? scenario.self_interference : 0.0) + scenario.noise_power;
}

double downlink_rate(int j, int slot, const Schedule& schedule, const PowerProfile& power,
                     const GainTables& gains, const Scenario& scenario,
                     const LinkModel& model) {
  const double signal = scenario.uav_tx_power * gains.downlink(j, slot);
  const double sinr =
      signal / downlink_interference(j, slot, schedule, power, gains, scenario);
  return model.rate_scale * log2_1p(sinr);
}

double uplink_rate(int i, int slot, const PowerProfile& power, const GainTables& gains,
                   const Scenario& scenario, const LinkModel& model) {
  const double sinr = power.watts(i, slot) * gains.uplink(i, slot) / uplink_noise(scenario, model);
  return model.rate_scale * log2_1p(sinr);
}

RateBreakdown evaluate(const Schedule& schedule, const PowerProfile& power,
                       const GainTables& gains, const Scenario& scenario,
                       const LinkModel& model) {
  const auto kd = gains.downlink.rows();
  const auto ku = gains.uplink.rows();
  const auto n_slots = gains.downlink.cols();

  RateBreakdown out;
  out.downlink.resize(kd, n_slots);
  out.uplink.resize(ku, n_slots);
  out.downlink_per_slot = Eigen::VectorXd::Zero(n_slots);
  out.uplink_per_slot = Eigen::VectorXd::Zero(n_slots);

  double total = 0.0;
  for (Eigen::Index n = 0; n < n_slots; ++n) {
    const int slot = static_cast<int>(n);
    for (Eigen::Index j = 0; j < kd; ++j) {
      const double r =
          downlink_rate(static_cast<int>(j), slot, schedule, power, gains, scenario, model);
      out.downlink(j, n) = r;
      out.downlink_per_slot(n) += schedule.downlink(j, n) * r;
    }
    for (Eigen::Index i = 0; i < ku; ++i) {
      const double r = uplink_rate(static_cast<int>(i), slot, power, gains, scenario, model);
      out.uplink(i, n) = r;
      out.uplink_per_slot(n) += schedule.uplink(i, n) * r;
    }
    total += out.downlink_per_slot(n);
    total += out.uplink_per_slot(n);
  }
  out.weighted_objective = total;
  return out;
}

RateBreakdown objective(const Schedule& schedule, const Trajectory& trajectory,
                        const PowerProfile& power, const Scenario& scenario,
                        const LinkModel& model) {
  return evaluate(schedule, power, build_gain_tables(scenario, trajectory, model), scenario,
                  model);
}

}  // namespace fduav
