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

#include <numbers>

#include "fduav/subproblems.hpp"
#include "sca_terms.hpp"

namespace fduav::surrogate {

double downlink_vs_schedule(int j, int slot, std::span<const double> candidate,
                            std::span<const double> expansion, const PowerProfile& power,
                            const GainTables& gains, const Scenario& scenario,
                            const LinkModel& model) {
  const double signal = scenario.uav_tx_power * gains.downlink(j, slot);
  double interference = scenario.noise_power;
  for (std::size_t i = 0; i < expansion.size(); ++i) {
    interference += expansion[i] * gains.cross(i, j) * power.watts(i, slot);
  }
  interference = detail::guard_floor(interference, scenario.noise_power);

  const double slope = detail::log_rate_slope(signal, interference);
  double value = log2_1p(signal / interference);
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    value -= gains.cross(i, j) * power.watts(i, slot) * slope * (candidate[i] - expansion[i]);
  }
  return model.rate_scale * value;
}

double downlink_vs_position(int j, int slot, const Vec2& candidate, const Vec2& expansion,
                            const Schedule& schedule, const PowerProfile& power,
                            const GainTables& gains, const Scenario& scenario,
                            const LinkModel& model) {
  const Vec2& w = scenario.downlink_users[j];
  const double interference =
      downlink_interference(j, slot, schedule, power, gains, scenario);
  const double c = scenario.uav_tx_power * scenario.beta0 / interference;
  const double h2 = scenario.altitude * scenario.altitude;
  const double z_exp = (expansion - w).squaredNorm() + h2;
  const double z_cand = (candidate - w).squaredNorm() + h2;
  const double weight = c * std::numbers::log2e / ((c + z_exp) * z_exp);
  return model.rate_scale * (log2_1p(c / z_exp) - weight * (z_cand - z_exp));
}

double uplink_vs_position(int i, int slot, const Vec2& candidate, const Vec2& expansion,
                          const PowerProfile& power, const Scenario& scenario,
                          const LinkModel& model) {
  const Vec2& w = scenario.uplink_users[i];
  const double e = power.watts(i, slot) * scenario.beta0 / uplink_noise(scenario, model);
  const double h2 = scenario.altitude * scenario.altitude;
  const double z_exp = (expansion - w).squaredNorm() + h2;
  const double z_cand = (candidate - w).squaredNorm() + h2;
  const double weight = e * std::numbers::log2e / ((e + z_exp) * z_exp);
  return model.rate_scale * (log2_1p(e / z_exp) - weight * (z_cand - z_exp));
}

double downlink_vs_power(int j, int slot, std::span<const double> candidate,
                         std::span<const double> expansion, const Schedule& schedule,
                         const GainTables& gains, const Scenario& scenario,
                         const LinkModel& model) {
  const double signal = scenario.uav_tx_power * gains.downlink(j, slot);
  double interference = scenario.noise_power;
  for (std::size_t i = 0; i < expansion.size(); ++i) {
    interference += schedule.uplink(i, slot) * gains.cross(i, j) * expansion[i];
  }
  interference = detail::guard_floor(interference, scenario.noise_power);

  const double slope = detail::log_rate_slope(signal, interference);
  double value = log2_1p(signal / interference);
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    value -= schedule.uplink(i, slot) * gains.cross(i, j) * slope * (candidate[i] - expansion[i]);
  }
  return model.rate_scale * value;
}

}  // namespace fduav::surrogate
