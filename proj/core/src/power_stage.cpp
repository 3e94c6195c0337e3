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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fduav/subproblems.hpp"
#include "sca_terms.hpp"

namespace fduav {

double optimal_uplink_power(double schedule_weight, double interference_price,
                            double snr_per_watt, double p_max, double current) {
  if (schedule_weight <= 0.0 || snr_per_watt <= 0.0) return current;
  if (interference_price <= 0.0) return p_max;
  // Stationary point of x log2(1 + b p) - a p.
  const double p = schedule_weight / (interference_price * std::numbers::ln2) - 1.0 / snr_per_watt;
  return std::clamp(p, 0.0, p_max);
}

PowerProfile solve_power(const Scenario& scenario, const GainTables& gains,
                         const Schedule& schedule, const PowerProfile& power,
                         const ScaSettings& settings, const LinkModel& model) {
  const int kd = static_cast<int>(gains.downlink.rows());
  const int ku = static_cast<int>(gains.uplink.rows());
  const int n_slots = schedule.num_slots();
  const double noise_u = uplink_noise(scenario, model);

  const auto true_objective = [&](const PowerProfile& p) {
    return evaluate(schedule, p, gains, scenario, model).weighted_objective;
  };

  PowerProfile current = power;
  double current_value = true_objective(current);
  Eigen::VectorXd slope(kd);

  for (int iter = 0; iter < settings.power_iters; ++iter) {
    PowerProfile next = current;
    for (int n = 0; n < n_slots; ++n) {
      for (int j = 0; j < kd; ++j) {
        slope(j) = 0.0;
        if (schedule.downlink(j, n) == 0.0) continue;
        const double signal = scenario.uav_tx_power * gains.downlink(j, n);
        const double interference = detail::guard_floor(
            downlink_interference(j, n, schedule, current, gains, scenario),
            scenario.noise_power);
        slope(j) = model.rate_scale * detail::log_rate_slope(signal, interference);
      }
      for (int i = 0; i < ku; ++i) {
        const double x = schedule.uplink(i, n);
        if (x == 0.0) continue;
        double price = 0.0;
        for (int j = 0; j < kd; ++j) {
          price += schedule.downlink(j, n) * x * gains.cross(i, j) * slope(j);
        }
        next.watts(i, n) = optimal_uplink_power(model.rate_scale * x, price,
                                                gains.uplink(i, n) / noise_u,
                                                scenario.max_uplink_power, current.watts(i, n));
      }
    }

    if (next.watts == current.watts) break;
    const double next_value = true_objective(next);
    if (next_value < current_value) break;
    const double gain = next_value - current_value;
    current = std::move(next);
    current_value = next_value;
    if (gain <= settings.inner_tolerance * std::max(std::abs(current_value), 1e-300)) break;
  }
  return current;
}

}  // namespace fduav
