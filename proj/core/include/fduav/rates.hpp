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

#ifndef FDUAV_RATES_HPP
#define FDUAV_RATES_HPP

#include <cmath>
#include <numbers>

#include <Eigen/Core>

#include "fduav/channel.hpp"
#include "fduav/scenario.hpp"
#include "fduav/variables.hpp"

namespace fduav {

// log2(1 + x), accurate for SINRs many orders of magnitude below 1.
inline double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

// Interference-plus-noise seen by downlink user j in a slot, given the
// uplink scheduling column and powers of that slot.
double downlink_interference(int j, int slot, const Schedule& schedule,
                             const PowerProfile& power, const GainTables& gains,
                             const Scenario& scenario);

// f_b + sigma^2, or sigma^2 alone when self-interference is switched off.
double uplink_noise(const Scenario& scenario, const LinkModel& model);

// R_j^d[n] in bits/s/Hz.
double downlink_rate(int j, int slot, const Schedule& schedule, const PowerProfile& power,
                     const GainTables& gains, const Scenario& scenario,
                     const LinkModel& model = {});

// R_i^u[n] in bits/s/Hz.
double uplink_rate(int i, int slot, const PowerProfile& power, const GainTables& gains,
                   const Scenario& scenario, const LinkModel& model = {});

struct RateBreakdown {
  Eigen::MatrixXd downlink;  // R_j^d[n]
  Eigen::MatrixXd uplink;    // R_i^u[n]
  double weighted_objective = 0.0;

  // Per-slot schedule-weighted sums, filled by evaluate().
  Eigen::VectorXd downlink_per_slot;
  Eigen::VectorXd uplink_per_slot;
};

// Rates and the scheduled sum for precomputed gains. The sum is accumulated
// slot-major in ascending order.
RateBreakdown evaluate(const Schedule& schedule, const PowerProfile& power,
                       const GainTables& gains, const Scenario& scenario,
                       const LinkModel& model = {});

// Same as evaluate(), building gains from the trajectory first.
RateBreakdown objective(const Schedule& schedule, const Trajectory& trajectory,
                        const PowerProfile& power, const Scenario& scenario,
                        const LinkModel& model = {});

}  // namespace fduav

#endif  // FDUAV_RATES_HPP
