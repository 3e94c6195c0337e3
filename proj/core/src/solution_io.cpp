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

#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fduav/experiments.hpp"
#include "kv_text.hpp"

namespace fduav {

namespace {

using nlohmann::json;

constexpr const char* kFormatTag = "fduav-solution/1";

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j.at(0).size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j.at(r);
    if (static_cast<Eigen::Index>(row.size()) != cols) throw ParseError("ragged matrix in JSON");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = row.at(c).get<double>();
  }
  return m;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k));
  return out;
}

Eigen::VectorXd vector_from_json(const json& j) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = j.at(k).get<double>();
  return v;
}

json schedule_to_json(const Schedule& s) {
  return {{"mode", s.mode == ScheduleMode::Binary ? "binary" : "relaxed"},
          {"downlink", matrix_to_json(s.downlink)},
          {"uplink", matrix_to_json(s.uplink)}};
}

Schedule schedule_from_json(const json& j) {
  Schedule s;
  const auto mode = j.at("mode").get<std::string>();
  if (mode != "binary" && mode != "relaxed") throw ParseError("bad schedule mode '" + mode + "'");
  s.mode = mode == "binary" ? ScheduleMode::Binary : ScheduleMode::Relaxed;
  s.downlink = matrix_from_json(j.at("downlink"));
  s.uplink = matrix_from_json(j.at("uplink"));
  return s;
}

std::string active_index(const Eigen::MatrixXd& x, Eigen::Index n) {
  for (Eigen::Index k = 0; k < x.rows(); ++k) {
    if (x(k, n) == 1.0) return std::to_string(k + 1);
  }
  return "-1";
}

}  // namespace

std::string solution_to_json(const Solution& s) {
  json traj = json::array();
  for (const auto& q : s.trajectory.waypoints) traj.push_back({q.x(), q.y()});

  const json doc = {
      {"format", kFormatTag},
      {"scheme", s.scheme},
      {"iterations_used", s.iterations_used},
      {"initial_objective", s.initial_objective},
      {"final_relaxed_objective", s.final_relaxed_objective},
      {"final_binary_objective", s.final_binary_objective},
      {"objective_trace", s.objective_trace},
      {"trajectory", std::move(traj)},
      {"schedule", schedule_to_json(s.schedule)},
      {"relaxed_schedule", schedule_to_json(s.relaxed_schedule)},
      {"power_watts", matrix_to_json(s.power.watts)},
      {"rates",
       {{"downlink", matrix_to_json(s.rates.downlink)},
        {"uplink", matrix_to_json(s.rates.uplink)},
        {"downlink_per_slot", vector_to_json(s.rates.downlink_per_slot)},
        {"uplink_per_slot", vector_to_json(s.rates.uplink_per_slot)},
        {"weighted_objective", s.rates.weighted_objective}}},
  };
  return doc.dump(2) + "\n";
}

Solution solution_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.at("format").get<std::string>() != kFormatTag) {
      throw ParseError("unsupported solution format");
    }
    Solution s;
    s.scheme = doc.at("scheme").get<std::string>();
    s.iterations_used = doc.at("iterations_used").get<int>();
    s.initial_objective = doc.at("initial_objective").get<double>();
    s.final_relaxed_objective = doc.at("final_relaxed_objective").get<double>();
    s.final_binary_objective = doc.at("final_binary_objective").get<double>();
    s.objective_trace = doc.at("objective_trace").get<std::vector<double>>();
    for (const auto& q : doc.at("trajectory")) {
      s.trajectory.waypoints.emplace_back(q.at(0).get<double>(), q.at(1).get<double>());
    }
    s.schedule = schedule_from_json(doc.at("schedule"));
    s.relaxed_schedule = schedule_from_json(doc.at("relaxed_schedule"));
    s.power.watts = matrix_from_json(doc.at("power_watts"));
    const json& rates = doc.at("rates");
    s.rates.downlink = matrix_from_json(rates.at("downlink"));
    s.rates.uplink = matrix_from_json(rates.at("uplink"));
    s.rates.downlink_per_slot = vector_from_json(rates.at("downlink_per_slot"));
    s.rates.uplink_per_slot = vector_from_json(rates.at("uplink_per_slot"));
    s.rates.weighted_objective = rates.at("weighted_objective").get<double>();
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("solution JSON: ") + e.what());
  }
}

Solution load_solution(const std::filesystem::path& path) {
  return solution_from_json(detail::read_file(path));
}

void export_solution(const Solution& s, const Scenario& scenario,
                     const std::filesystem::path& dir) {
  using detail::format_double;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  std::ostringstream traj;
  traj << "n,t_seconds,x_m,y_m\n";
  for (std::size_t n = 0; n < s.trajectory.waypoints.size(); ++n) {
    const auto& q = s.trajectory.waypoints[n];
    traj << n << ',' << format_double(static_cast<double>(n) * scenario.slot_duration) << ','
         << format_double(q.x()) << ',' << format_double(q.y()) << '\n';
  }

  // Slots and users are 1-based; slot n is served from waypoint n.
  std::ostringstream sched;
  sched << "n,downlink_user,uplink_user";
  for (Eigen::Index j = 0; j < s.relaxed_schedule.downlink.rows(); ++j) {
    sched << ",xd_" << j + 1;
  }
  for (Eigen::Index i = 0; i < s.relaxed_schedule.uplink.rows(); ++i) {
    sched << ",xu_" << i + 1;
  }
  sched << '\n';
  for (Eigen::Index n = 0; n < s.schedule.downlink.cols(); ++n) {
    sched << n + 1 << ',' << active_index(s.schedule.downlink, n) << ','
          << active_index(s.schedule.uplink, n);
    for (Eigen::Index j = 0; j < s.relaxed_schedule.downlink.rows(); ++j) {
      sched << ',' << format_double(s.relaxed_schedule.downlink(j, n));
    }
    for (Eigen::Index i = 0; i < s.relaxed_schedule.uplink.rows(); ++i) {
      sched << ',' << format_double(s.relaxed_schedule.uplink(i, n));
    }
    sched << '\n';
  }

  std::ostringstream power;
  power << "n,i,p_watts\n";
  for (Eigen::Index n = 0; n < s.power.watts.cols(); ++n) {
    for (Eigen::Index i = 0; i < s.power.watts.rows(); ++i) {
      power << n + 1 << ',' << i + 1 << ',' << format_double(s.power.watts(i, n)) << '\n';
    }
  }

  std::ostringstream rates;
  rates << "n,Rd_weighted,Ru_weighted\n";
  for (Eigen::Index n = 0; n < s.rates.downlink_per_slot.size(); ++n) {
    rates << n + 1 << ',' << format_double(s.rates.downlink_per_slot(n)) << ','
          << format_double(s.rates.uplink_per_slot(n)) << '\n';
  }

  detail::write_file(dir / "trajectory.csv", traj.str());
  detail::write_file(dir / "schedule.csv", sched.str());
  detail::write_file(dir / "power.csv", power.str());
  detail::write_file(dir / "rates.csv", rates.str());
  detail::write_file(dir / "solution.json", solution_to_json(s));
}

std::vector<std::string> check_solution(const Solution& s, const Scenario& scenario) {
  std::vector<std::string> problems;
  const auto expect = [&problems](bool ok, std::string what) {
    if (!ok) problems.push_back(std::move(what));
  };
  const auto guarded = [&problems](const auto& check) {
    try {
      check();
    } catch (const ValidationError& e) {
      problems.emplace_back(e.what());
    }
  };

  expect(!s.objective_trace.empty(), "objective trace is empty");
  expect(static_cast<int>(s.objective_trace.size()) == s.iterations_used,
         "iterations_used does not match the trace length");
  for (std::size_t r = 1; r < s.objective_trace.size(); ++r) {
    expect(s.objective_trace[r] >= s.objective_trace[r - 1] - 1e-9,
           "objective trace decreases at pass " + std::to_string(r + 1));
  }
  if (!s.objective_trace.empty()) {
    expect(s.final_relaxed_objective == s.objective_trace.back(),
           "final relaxed objective differs from the last trace entry");
  }
  expect(s.final_binary_objective <= s.final_relaxed_objective + 1e-9,
         "binary objective exceeds the relaxed objective");

  const auto kd = scenario.num_downlink();
  const auto ku = scenario.num_uplink();
  const auto n_slots = scenario.num_slots;
  for (const Schedule* sched : {&s.schedule, &s.relaxed_schedule}) {
    expect(sched->downlink.rows() == kd && sched->downlink.cols() == n_slots &&
               sched->uplink.rows() == ku && sched->uplink.cols() == n_slots,
           "schedule has wrong dimensions");
  }
  expect(s.schedule.mode == ScheduleMode::Binary, "final schedule is not binary");
  if (problems.empty()) {
    guarded([&] { check_schedule(s.schedule); });
    guarded([&] { check_schedule(s.relaxed_schedule); });
  }
  guarded([&] { check_power(scenario, s.power); });

  if (s.scheme == "static") {
    expect(s.trajectory.num_slots() == n_slots, "trajectory has wrong length");
    bool hovering = true;
    for (const auto& q : s.trajectory.waypoints) hovering = hovering && q == s.trajectory.waypoints.front();
    expect(hovering, "static trajectory moves");
  } else {
    guarded([&] { check_trajectory(scenario, s.trajectory); });
  }
  return problems;
}

}  // namespace fduav
