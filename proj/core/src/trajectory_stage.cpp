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

namespace fduav {

TrajectorySurrogate::TrajectorySurrogate(const Scenario& scenario, const Schedule& schedule,
                                         const PowerProfile& power, const Trajectory& expansion,
                                         const LinkModel& model) {
  const GainTables gains = build_gain_tables(scenario, expansion, model);
  const double h2 = scenario.altitude * scenario.altitude;
  const double uplink_floor = uplink_noise(scenario, model);

  // log2(1 + k / z) linearized in z at z_exp is
  //   log2(1 + k / z_exp) - slope * (z - z_exp),  slope = k log2(e) / ((k + z_exp) z_exp),
  // and with z = |q - w|^2 + H^2 that is a constant minus slope * |q - w|^2.
  const auto add_term = [&](Slot& slot, double schedule_weight, double k, const Vec2& w,
                            const Vec2& q_exp) {
    if (schedule_weight == 0.0 || k == 0.0) return;
    const double d2 = (q_exp - w).squaredNorm();
    const double z_exp = d2 + h2;
    const double slope = k * std::numbers::log2e / ((k + z_exp) * z_exp);
    const double scale = schedule_weight * model.rate_scale;
    slot.constant += scale * (log2_1p(k / z_exp) + slope * d2);
    slot.terms.push_back({scale * slope, w});
  };

  slots_.resize(expansion.num_slots());
  for (int n = 0; n < expansion.num_slots(); ++n) {
    Slot& slot = slots_[n];
    const Vec2& q_exp = expansion.slot_position(n);
    for (int j = 0; j < scenario.num_downlink(); ++j) {
      const double interference = downlink_interference(j, n, schedule, power, gains, scenario);
      const double k = scenario.uav_tx_power * scenario.beta0 / interference;
      add_term(slot, schedule.downlink(j, n), k, scenario.downlink_users[j], q_exp);
    }
    for (int i = 0; i < scenario.num_uplink(); ++i) {
      const double k = power.watts(i, n) * scenario.beta0 / uplink_floor;
      add_term(slot, schedule.uplink(i, n), k, scenario.uplink_users[i], q_exp);
    }
  }
}

double TrajectorySurrogate::value(const Trajectory& trajectory) const {
  double total = 0.0;
  for (std::size_t n = 0; n < slots_.size(); ++n) {
    const Vec2& q = trajectory.slot_position(static_cast<int>(n));
    double v = slots_[n].constant;
    for (const Term& t : slots_[n].terms) v -= t.weight * (q - t.anchor).squaredNorm();
    total += v;
  }
  return total;
}

std::vector<Vec2> TrajectorySurrogate::gradient(const Trajectory& trajectory) const {
  std::vector<Vec2> g(trajectory.waypoints.size(), Vec2::Zero());
  // The last slot sits on q_F, which is fixed; it keeps a zero gradient.
  for (std::size_t n = 0; n + 1 < slots_.size(); ++n) {
    const Vec2& q = trajectory.slot_position(static_cast<int>(n));
    Vec2& out = g[n + 1];
    for (const Term& t : slots_[n].terms) out -= 2.0 * t.weight * (q - t.anchor);
  }
  return g;
}

namespace {

Vec2 project_to_ball(const Vec2& p, const Vec2& center, double radius) {
  const Vec2 d = p - center;
  const double len = d.norm();
  return len <= radius ? p : Vec2(center + d * (radius / len));
}

// Projection of a point pair onto {(a, b) : |b - a| <= r}: keep the midpoint,
// shrink the difference.
void project_pair(Vec2& a, Vec2& b, double radius) {
  const Vec2 d = b - a;
  const double len = d.norm();
  if (len <= radius) return;
  const Vec2 mid = 0.5 * (a + b);
  const Vec2 half = d * (0.5 * radius / len);
  a = mid - half;
  b = mid + half;
}

// Largest t in [0, 1] such that (1 - t) * anchor + t * candidate satisfies
// every speed constraint. The anchor must be feasible.
double feasible_fraction(const Scenario& scenario, const Trajectory& anchor,
                         const Trajectory& candidate) {
  const double r = scenario.max_step();
  double t = 1.0;
  for (std::size_t n = 1; n < anchor.waypoints.size(); ++n) {
    const Vec2 u = anchor.waypoints[n] - anchor.waypoints[n - 1];
    const Vec2 v = (candidate.waypoints[n] - candidate.waypoints[n - 1]) - u;
    if ((u + v).norm() <= r) continue;
    const double vv = v.squaredNorm();
    if (vv == 0.0) continue;
    const double uv = u.dot(v);
    const double disc = std::max(uv * uv - vv * (u.squaredNorm() - r * r), 0.0);
    t = std::min(t, std::max((-uv + std::sqrt(disc)) / vv, 0.0));
  }
  return t;
}

Trajectory blend(const Trajectory& a, const Trajectory& b, double t) {
  Trajectory out = a;
  for (std::size_t n = 0; n < a.waypoints.size(); ++n) {
    out.waypoints[n] = (1.0 - t) * a.waypoints[n] + t * b.waypoints[n];
  }
  out.waypoints.front() = a.waypoints.front();
  out.waypoints.back() = a.waypoints.back();
  return out;
}

double max_abs_move(const Trajectory& a, const Trajectory& b) {
  double m = 0.0;
  for (std::size_t n = 0; n < a.waypoints.size(); ++n) {
    m = std::max(m, (a.waypoints[n] - b.waypoints[n]).lpNorm<Eigen::Infinity>());
  }
  return m;
}

}  // namespace

Trajectory project_speed_chain(const Scenario& scenario, const Trajectory& target,
                               int max_sweeps) {
  const int n_slots = target.num_slots();
  const double r = scenario.max_step();
  Trajectory x = target;
  x.waypoints.front() = scenario.q_initial;
  x.waypoints.back() = scenario.q_final;
  if (n_slots <= 1) return x;

  // Dykstra correction terms: link l couples waypoints l-1 and l; only free
  // waypoints (1..N-1) carry a correction.
  std::vector<Vec2> corr_lo(n_slots + 1, Vec2::Zero());  // for waypoint l-1
  std::vector<Vec2> corr_hi(n_slots + 1, Vec2::Zero());  // for waypoint l
  const double stop = 1e-10 * std::max(1.0, r);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double moved = 0.0;
    for (int l = 1; l <= n_slots; ++l) {
      const bool lo_free = l - 1 > 0;
      const bool hi_free = l < n_slots;
      Vec2 a = x.waypoints[l - 1] + (lo_free ? corr_lo[l] : Vec2::Zero());
      Vec2 b = x.waypoints[l] + (hi_free ? corr_hi[l] : Vec2::Zero());
      Vec2 pa = a;
      Vec2 pb = b;
      if (lo_free && hi_free) {
        project_pair(pa, pb, r);
      } else if (hi_free) {
        pb = project_to_ball(b, x.waypoints[l - 1], r);
      } else {
        pa = project_to_ball(a, x.waypoints[l], r);
      }
      if (lo_free) {
        corr_lo[l] = a - pa;
        moved = std::max(moved, (pa - x.waypoints[l - 1]).lpNorm<Eigen::Infinity>());
        x.waypoints[l - 1] = pa;
      }
      if (hi_free) {
        corr_hi[l] = b - pb;
        moved = std::max(moved, (pb - x.waypoints[l]).lpNorm<Eigen::Infinity>());
        x.waypoints[l] = pb;
      }
    }
    if (moved <= stop && max_speed_violation(scenario, x) <= 0.25 * kFeasTol) break;
  }

  // Whatever violation the sweep budget leaves is removed by pulling toward
  // the constant-speed line, which lies inside the feasible set.
  if (max_speed_violation(scenario, x) > 0.0) {
    const Trajectory line = straight_line(scenario);
    x = blend(line, x, feasible_fraction(scenario, line, x));
  }
  return x;
}

Trajectory maximize_trajectory_surrogate(const Scenario& scenario,
                                         const TrajectorySurrogate& surrogate,
                                         const Trajectory& start,
                                         const ScaSettings& settings) {
  Trajectory x = start;
  if (x.num_slots() <= 1) return x;

  double fx = surrogate.value(x);
  const double base_step = settings.initial_step.value_or(scenario.max_step());
  double step = base_step;
  // Converged once the projected-gradient mapping has shrunk by
  // stationarity_tol relative to the gradient at the start. The mapping is
  // measured as |y - x| / min(step, base_step), which never understates the
  // mapping at base_step, so a grown step cannot fake convergence.
  double initial_gradient = 0.0;
  constexpr int kMaxBacktracks = 60;

  for (int k = 0; k < settings.gradient_steps; ++k) {
    const std::vector<Vec2> g = surrogate.gradient(x);
    if (k == 0) {
      for (const auto& v : g) {
        initial_gradient = std::max(initial_gradient, v.lpNorm<Eigen::Infinity>());
      }
      if (initial_gradient == 0.0) break;
    }

    bool accepted = false;
    Trajectory y;
    double fy = fx;
    for (int bt = 0; bt < kMaxBacktracks; ++bt) {
      Trajectory target = x;
      for (std::size_t n = 0; n < x.waypoints.size(); ++n) target.waypoints[n] += step * g[n];
      y = project_speed_chain(scenario, target, settings.dykstra_sweeps);
      fy = surrogate.value(y);
      double ascent = 0.0;
      for (std::size_t n = 0; n < x.waypoints.size(); ++n) {
        ascent += g[n].dot(y.waypoints[n] - x.waypoints[n]);
      }
      if (ascent > 0.0 && fy >= fx + settings.armijo * ascent) {
        accepted = true;
        break;
      }
      step *= settings.backtrack;
    }
    if (!accepted) break;

    const double mapping = max_abs_move(x, y) / std::min(step, base_step);
    x = std::move(y);
    fx = fy;
    if (mapping <= settings.stationarity_tol * initial_gradient) break;
    step /= settings.backtrack;
  }
  return x;
}

Trajectory solve_trajectory(const Scenario& scenario, const Schedule& schedule,
                            const PowerProfile& power, const Trajectory& trajectory,
                            const ScaSettings& settings, const LinkModel& model) {
  check_trajectory(scenario, trajectory);
  if (trajectory.num_slots() <= 1) return trajectory;

  const auto true_objective = [&](const Trajectory& q) {
    return objective(schedule, q, power, scenario, model).weighted_objective;
  };

  Trajectory current = trajectory;
  double current_value = true_objective(current);
  constexpr int kMaxHalvings = 30;

  for (int iter = 0; iter < settings.trajectory_iters; ++iter) {
    const TrajectorySurrogate surrogate(scenario, schedule, power, current, model);
    Trajectory candidate = maximize_trajectory_surrogate(scenario, surrogate, current, settings);
    double candidate_value = true_objective(candidate);
    for (int h = 0; h < kMaxHalvings && candidate_value < current_value; ++h) {
      candidate = blend(current, candidate, 0.5);
      candidate_value = true_objective(candidate);
    }
    if (candidate_value < current_value) break;

    const double gain = candidate_value - current_value;
    current = std::move(candidate);
    current_value = candidate_value;
    if (gain <= settings.inner_tolerance * std::max(std::abs(current_value), 1e-300)) break;
  }
  return current;
}

}  // namespace fduav
