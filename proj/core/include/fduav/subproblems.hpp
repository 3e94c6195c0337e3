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

#ifndef FDUAV_SUBPROBLEMS_HPP
#define FDUAV_SUBPROBLEMS_HPP

#include <optional>
#include <span>
#include <vector>

#include "fduav/channel.hpp"
#include "fduav/rates.hpp"
#include "fduav/scenario.hpp"
#include "fduav/variables.hpp"

namespace fduav {

// Iteration limits and tolerances for the per-block SCA loops.
struct ScaSettings {
  int schedule_iters = 20;    // uplink scheduling SCA passes
  int trajectory_iters = 20;  // trajectory SCA passes
  int power_iters = 20;       // power SCA passes
  double inner_tolerance = 1e-4;

  // Projected gradient ascent on the trajectory surrogate.
  int gradient_steps = 500;
  std::optional<double> initial_step;  // unset: vmax * delta
  double backtrack = 0.5;
  double armijo = 1e-4;
  int dykstra_sweeps = 200;
  double stationarity_tol = 1e-6;

  // After the uplink scheduling SCA, compare each slot against every vertex
  // of its simplex and keep the best (see solve_uplink_schedule).
  bool vertex_check = true;

  // Throws ValidationError on non-positive limits or tolerances >= 1.
  void validate() const;
};

// Concave lower bounds of the rates, each tight at its expansion point.
namespace surrogate {

// R_j^d[n] linearized in the uplink scheduling column of the slot.
double downlink_vs_schedule(int j, int slot, std::span<const double> candidate,
                            std::span<const double> expansion, const PowerProfile& power,
                            const GainTables& gains, const Scenario& scenario,
                            const LinkModel& model = {});

// R_j^d[n] as a function of the UAV position, linearized in |q - w_j|^2.
double downlink_vs_position(int j, int slot, const Vec2& candidate, const Vec2& expansion,
                            const Schedule& schedule, const PowerProfile& power,
                            const GainTables& gains, const Scenario& scenario,
                            const LinkModel& model = {});

// R_i^u[n] as a function of the UAV position, linearized in |q - w_i|^2.
double uplink_vs_position(int i, int slot, const Vec2& candidate, const Vec2& expansion,
                          const PowerProfile& power, const Scenario& scenario,
                          const LinkModel& model = {});

// R_j^d[n] linearized in the uplink powers of the slot.
double downlink_vs_power(int j, int slot, std::span<const double> candidate,
                         std::span<const double> expansion, const Schedule& schedule,
                         const GainTables& gains, const Scenario& scenario,
                         const LinkModel& model = {});

}  // namespace surrogate

// Stage 1. Per slot, the downlink user with the largest rate gets the slot;
// ties go to the lowest index.
Schedule solve_downlink_schedule(const Scenario& scenario, const GainTables& gains,
                                 const Schedule& schedule, const PowerProfile& power,
                                 const LinkModel& model = {});

// Stage 2. SCA on the uplink scheduling: each pass linearizes the downlink
// rates at the current point and solves the per-slot LP at a vertex. With
// vertex_check, the result is then compared slot by slot against all K_U + 1
// vertices under the true objective; the per-slot problem maximizes a convex
// function over a simplex, so the best vertex is its global optimum.
Schedule solve_uplink_schedule(const Scenario& scenario, const GainTables& gains,
                               const Schedule& schedule, const PowerProfile& power,
                               const ScaSettings& settings, const LinkModel& model = {});

// The concave trajectory surrogate at a fixed expansion trajectory. Per
// waypoint it is a constant minus a weighted sum of squared distances to the
// users scheduled in that slot.
class TrajectorySurrogate {
 public:
  TrajectorySurrogate(const Scenario& scenario, const Schedule& schedule,
                      const PowerProfile& power, const Trajectory& expansion,
                      const LinkModel& model = {});

  double value(const Trajectory& trajectory) const;
  // Gradient w.r.t. every waypoint; fixed endpoints get zero.
  std::vector<Vec2> gradient(const Trajectory& trajectory) const;

 private:
  struct Term {
    double weight;  // > 0
    Vec2 anchor;
  };
  struct Slot {
    double constant = 0.0;
    std::vector<Term> terms;
  };
  std::vector<Slot> slots_;
};

// Euclidean projection of `target` onto {q[0] = q_I, q[N] = q_F,
// |q[n] - q[n-1]| <= vmax * delta} by Dykstra's alternating projections.
// The result is always feasible: if the sweep budget runs out first, the
// remaining violation is removed by moving a small fraction of the way toward
// the constant-speed line.
Trajectory project_speed_chain(const Scenario& scenario, const Trajectory& target,
                               int max_sweeps);

// Projected gradient ascent on one surrogate, starting from a feasible point.
// Every iterate stays feasible.
Trajectory maximize_trajectory_surrogate(const Scenario& scenario,
                                         const TrajectorySurrogate& surrogate,
                                         const Trajectory& start, const ScaSettings& settings);

// Stage 3. Outer SCA loop over the trajectory; a candidate is accepted only
// if the true objective does not decrease, otherwise it is pulled halfway
// back toward the current iterate. Throws ValidationError for an infeasible
// input trajectory.
Trajectory solve_trajectory(const Scenario& scenario, const Schedule& schedule,
                            const PowerProfile& power, const Trajectory& trajectory,
                            const ScaSettings& settings, const LinkModel& model = {});

// argmax over p in [0, p_max] of x * log2(1 + b p) - a p. With a == 0 the
// maximizer is p_max if x > 0; with x == 0 the objective is flat and
// `current` is returned.
double optimal_uplink_power(double schedule_weight, double interference_price,
                            double snr_per_watt, double p_max, double current);

// Stage 4. SCA on the uplink powers; each surrogate decouples per (i, n)
// and is maximized by optimal_uplink_power.
PowerProfile solve_power(const Scenario& scenario, const GainTables& gains,
                         const Schedule& schedule, const PowerProfile& power,
                         const ScaSettings& settings, const LinkModel& model = {});

}  // namespace fduav

#endif  // FDUAV_SUBPROBLEMS_HPP
