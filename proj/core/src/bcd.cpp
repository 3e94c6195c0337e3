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

#include "fduav/bcd.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "kv_text.hpp"

namespace fduav {

void BcdSettings::validate() const {
  sca.validate();
  if (max_outer_iters < 1) throw ValidationError("max_outer_iters must be >= 1");
}

BcdSettings parse_settings(std::string_view text) {
  BcdSettings s;
  using detail::parse_double;
  using detail::parse_int;
  using Setter = std::function<void(std::string_view, std::string_view)>;
  const std::map<std::string, Setter, std::less<>> setters = {
      {"max_outer_iters", [&](auto k, auto v) { s.max_outer_iters = parse_int(v, k); }},
      {"schedule_iters", [&](auto k, auto v) { s.sca.schedule_iters = parse_int(v, k); }},
      {"trajectory_iters", [&](auto k, auto v) { s.sca.trajectory_iters = parse_int(v, k); }},
      {"power_iters", [&](auto k, auto v) { s.sca.power_iters = parse_int(v, k); }},
      {"inner_tolerance", [&](auto k, auto v) { s.sca.inner_tolerance = parse_double(v, k); }},
      {"gradient_steps", [&](auto k, auto v) { s.sca.gradient_steps = parse_int(v, k); }},
      {"initial_step", [&](auto k, auto v) { s.sca.initial_step = parse_double(v, k); }},
      {"backtrack", [&](auto k, auto v) { s.sca.backtrack = parse_double(v, k); }},
      {"armijo", [&](auto k, auto v) { s.sca.armijo = parse_double(v, k); }},
      {"dykstra_sweeps", [&](auto k, auto v) { s.sca.dykstra_sweeps = parse_int(v, k); }},
      {"stationarity_tol", [&](auto k, auto v) { s.sca.stationarity_tol = parse_double(v, k); }},
      {"vertex_check", [&](auto k, auto v) { s.sca.vertex_check = detail::parse_bool(v, k); }},
  };
  for (const auto& kv : detail::parse_key_values(text)) {
    const auto it = setters.find(kv.key);
    if (it == setters.end()) {
      throw ParseError("line " + std::to_string(kv.line) + ": unknown settings key '" + kv.key +
                       "'");
    }
    it->second(kv.key, kv.value);
  }
  s.validate();
  return s;
}

BcdSettings load_settings(const std::filesystem::path& path) {
  return parse_settings(detail::read_file(path));
}

std::string format_settings(const BcdSettings& s) {
  using detail::format_double;
  std::string out;
  const auto line = [&out](std::string_view key, const std::string& value) {
    out.append(key).append(" = ").append(value).push_back('\n');
  };
  line("max_outer_iters", std::to_string(s.max_outer_iters));
  line("schedule_iters", std::to_string(s.sca.schedule_iters));
  line("trajectory_iters", std::to_string(s.sca.trajectory_iters));
  line("power_iters", std::to_string(s.sca.power_iters));
  line("inner_tolerance", format_double(s.sca.inner_tolerance));
  line("gradient_steps", std::to_string(s.sca.gradient_steps));
  if (s.sca.initial_step) line("initial_step", format_double(*s.sca.initial_step));
  line("backtrack", format_double(s.sca.backtrack));
  line("armijo", format_double(s.sca.armijo));
  line("dykstra_sweeps", std::to_string(s.sca.dykstra_sweeps));
  line("stationarity_tol", format_double(s.sca.stationarity_tol));
  line("vertex_check", s.sca.vertex_check ? "true" : "false");
  return out;
}

InitialState initialize(const Scenario& scenario) {
  validate(scenario);
  return {uniform_schedule(scenario), straight_line(scenario), full_power(scenario)};
}

Schedule round_schedule(const Schedule& relaxed) {
  const auto round_block = [](const Eigen::MatrixXd& x) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(x.rows(), x.cols());
    for (Eigen::Index n = 0; n < x.cols(); ++n) {
      for (Eigen::Index k = 0; k < x.rows(); ++k) {
        if (x(k, n) >= 0.5) {
          out(k, n) = 1.0;
          break;  // a second entry >= 0.5 can only be a 0.5 tie
        }
      }
    }
    return out;
  };
  return {round_block(relaxed.downlink), round_block(relaxed.uplink), ScheduleMode::Binary};
}

Solution run(const Scenario& scenario, const BcdSettings& settings, const StagePlan& plan) {
  validate(scenario);
  settings.validate();

  InitialState state = initialize(scenario);
  if (plan.fixed_trajectory) {
    if (plan.fixed_trajectory->num_slots() != scenario.num_slots) {
      throw ValidationError("fixed trajectory has the wrong number of slots");
    }
    state.trajectory = *plan.fixed_trajectory;
  }

  const LinkModel& model = plan.model;
  GainTables gains = build_gain_tables(scenario, state.trajectory, model);

  Solution sol;
  double previous = evaluate(state.schedule, state.power, gains, scenario, model).weighted_objective;
  sol.initial_objective = previous;

  for (int pass = 0; pass < settings.max_outer_iters; ++pass) {
    if (plan.downlink_schedule) {
      state.schedule =
          solve_downlink_schedule(scenario, gains, state.schedule, state.power, model);
    }
    if (plan.uplink_schedule) {
      state.schedule = solve_uplink_schedule(scenario, gains, state.schedule, state.power,
                                             settings.sca, model);
    }
    if (plan.trajectory) {
      state.trajectory = solve_trajectory(scenario, state.schedule, state.power,
                                          state.trajectory, settings.sca, model);
      gains = build_gain_tables(scenario, state.trajectory, model);
    }
    if (plan.power) {
      state.power = solve_power(scenario, gains, state.schedule, state.power, settings.sca, model);
    }

    const double value =
        evaluate(state.schedule, state.power, gains, scenario, model).weighted_objective;
    sol.objective_trace.push_back(value);
    sol.iterations_used = pass + 1;

    const bool converged =
        previous > 0.0 ? (value - previous) / previous < scenario.tolerance : value <= previous;
    previous = value;
    if (converged) break;
  }

  sol.relaxed_schedule = state.schedule;
  sol.schedule = round_schedule(state.schedule);
  sol.trajectory = std::move(state.trajectory);
  sol.power = std::move(state.power);
  sol.final_relaxed_objective = sol.objective_trace.back();
  sol.rates = evaluate(sol.schedule, sol.power, gains, scenario, model);
  sol.final_binary_objective = sol.rates.weighted_objective;
  return sol;
}

}  // namespace fduav
