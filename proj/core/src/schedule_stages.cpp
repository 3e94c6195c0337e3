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

#include <cmath>

#include "fduav/subproblems.hpp"
#include "sca_terms.hpp"

namespace fduav {

void ScaSettings::validate() const {
  const auto fail = [](const char* what) { throw ValidationError(what); };
  if (schedule_iters < 1 || trajectory_iters < 1 || power_iters < 1) {
    fail("SCA iteration limits must be >= 1");
  }
  if (!(inner_tolerance > 0.0 && inner_tolerance < 1.0)) fail("inner_tolerance must be in (0,1)");
  if (gradient_steps < 1) fail("gradient_steps must be >= 1");
  if (initial_step && !(*initial_step > 0.0)) fail("initial_step must be > 0");
  if (!(backtrack > 0.0 && backtrack < 1.0)) fail("backtrack must be in (0,1)");
  if (!(armijo > 0.0 && armijo < 1.0)) fail("armijo must be in (0,1)");
  if (dykstra_sweeps < 1) fail("dykstra_sweeps must be >= 1");
  if (!(stationarity_tol > 0.0 && stationarity_tol < 1.0)) {
    fail("stationarity_tol must be in (0,1)");
  }
}

Schedule solve_downlink_schedule(const Scenario& scenario, const GainTables& gains,
                                 const Schedule& schedule, const PowerProfile& power,
                                 const LinkModel& model) {
  Schedule out = schedule;
  const int kd = static_cast<int>(gains.downlink.rows());
  for (int n = 0; n < schedule.num_slots(); ++n) {
    int best = 0;
    double best_rate = -1.0;
    for (int j = 0; j < kd; ++j) {
      const double r = downlink_rate(j, n, schedule, power, gains, scenario, model);
      if (r > best_rate) {
        best_rate = r;
        best = j;
      }
    }
    out.downlink.col(n).setZero();
    out.downlink(best, n) = 1.0;
  }
  return out;
}

namespace {

// True objective contribution of one slot for a given uplink scheduling column.
double slot_objective(int n, const Eigen::VectorXd& uplink_col, const Schedule& schedule,
                      const PowerProfile& power, const GainTables& gains,
                      const Scenario& scenario, const LinkModel& model) {
  double value = 0.0;
  for (Eigen::Index j = 0; j < gains.downlink.rows(); ++j) {
    const double xd = schedule.downlink(j, n);
    if (xd == 0.0) continue;
    double interference = scenario.noise_power;
    for (Eigen::Index i = 0; i < gains.uplink.rows(); ++i) {
      interference += uplink_col(i) * gains.cross(i, j) * power.watts(i, n);
    }
    value += xd * model.rate_scale *
             log2_1p(scenario.uav_tx_power * gains.downlink(j, n) / interference);
  }
  for (Eigen::Index i = 0; i < gains.uplink.rows(); ++i) {
    if (uplink_col(i) == 0.0) continue;
    value += uplink_col(i) * uplink_rate(static_cast<int>(i), n, power, gains, scenario, model);
  }
  return value;
}

}  // namespace

Schedule solve_uplink_schedule(const Scenario& scenario, const GainTables& gains,
                               const Schedule& schedule, const PowerProfile& power,
                               const ScaSettings& settings, const LinkModel& model) {
  const int kd = static_cast<int>(gains.downlink.rows());
  const int ku = static_cast<int>(gains.uplink.rows());
  const int n_slots = schedule.num_slots();

  const auto true_objective = [&](const Schedule& s) {
    return evaluate(s, power, gains, scenario, model).weighted_objective;
  };

  Schedule current = schedule;
  double current_value = true_objective(current);
  Eigen::VectorXd coeff(ku);

  for (int iter = 0; iter < settings.schedule_iters; ++iter) {
    Schedule next = current;
    double surrogate_gain = 0.0;
    for (int n = 0; n < n_slots; ++n) {
      for (int i = 0; i < ku; ++i) {
        coeff(i) = uplink_rate(i, n, power, gains, scenario, model);
      }
      for (int j = 0; j < kd; ++j) {
        const double xd = current.downlink(j, n);
        if (xd == 0.0) continue;
        const double signal = scenario.uav_tx_power * gains.downlink(j, n);
        const double interference = detail::guard_floor(
            downlink_interference(j, n, current, power, gains, scenario), scenario.noise_power);
        const double slope = model.rate_scale * detail::log_rate_slope(signal, interference);
        for (int i = 0; i < ku; ++i) {
          coeff(i) -= xd * gains.cross(i, j) * power.watts(i, n) * slope;
        }
      }

      int best = 0;
      for (int i = 1; i < ku; ++i) {
        if (coeff(i) > coeff(best)) best = i;
      }
      const double best_coeff = coeff(best);
      next.uplink.col(n).setZero();
      if (best_coeff > 0.0) next.uplink(best, n) = 1.0;
      surrogate_gain += coeff.dot(next.uplink.col(n) - current.uplink.col(n));
    }

    if (next.uplink == current.uplink) break;
    const double next_value = true_objective(next);
    if (next_value < current_value) break;
    current = std::move(next);
    current_value = next_value;
    if (surrogate_gain <= settings.inner_tolerance * std::max(std::abs(current_value), 1e-300)) {
      break;
    }
  }

  if (settings.vertex_check) {
    Eigen::VectorXd vertex(ku);
    for (int n = 0; n < n_slots; ++n) {
      Eigen::VectorXd best_col = current.uplink.col(n);
      double best = slot_objective(n, best_col, current, power, gains, scenario, model);
      for (int v = -1; v < ku; ++v) {
        vertex.setZero();
        if (v >= 0) vertex(v) = 1.0;
        const double value = slot_objective(n, vertex, current, power, gains, scenario, model);
        if (value > best) {
          best = value;
          best_col = vertex;
        }
      }
      current.uplink.col(n) = best_col;
    }
  }
  return current;
}

}  // namespace fduav
