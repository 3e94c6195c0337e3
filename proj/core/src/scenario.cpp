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

#include "fduav/scenario.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "kv_text.hpp"

namespace fduav {

double db_to_linear(double value_db) { return std::pow(10.0, value_db / 10.0); }

double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

double dbm_to_watts(double value_dbm) { return std::pow(10.0, (value_dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

bool finite(const Vec2& p) { return std::isfinite(p.x()) && std::isfinite(p.y()); }

}  // namespace

void validate(const Scenario& s) {
  require(s.num_downlink() >= 1, "at least one downlink user is required");
  require(s.num_uplink() >= 1, "at least one uplink user is required");
  for (const auto& w : s.downlink_users) require(finite(w), "downlink user position not finite");
  for (const auto& w : s.uplink_users) require(finite(w), "uplink user position not finite");
  require(finite(s.q_initial) && finite(s.q_final), "endpoints must be finite");

  require(s.num_slots >= 1, "num_slots_N must be >= 1");
  require(std::isfinite(s.slot_duration) && s.slot_duration > 0.0,
          "slot_duration_delta must be > 0");
  require(std::isfinite(s.period) && s.period > 0.0, "period_T must be > 0");
  require(std::abs(s.period - s.num_slots * s.slot_duration) <= 1e-9 * std::max(1.0, s.period),
          "period_T must equal num_slots_N * slot_duration_delta");

  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  require(positive(s.altitude), "altitude_H must be > 0");
  require(positive(s.beta0), "beta0 must be > 0");
  require(positive(s.noise_power), "noise_power_sigma2 must be > 0");
  require(positive(s.uav_tx_power), "uav_tx_power_pb must be > 0");
  require(positive(s.max_uplink_power), "max_uplink_power_Pmax must be > 0");
  require(positive(s.vmax), "vmax must be > 0");
  require(positive(s.self_interference), "self_interference_fb must be > 0");
  require(positive(s.bandwidth), "bandwidth_B must be > 0");
  require(positive(s.tolerance), "tolerance_eps must be > 0");
  require(std::isfinite(s.pathloss_alpha) && s.pathloss_alpha >= 2.0,
          "pathloss_alpha must be >= 2");

  const double distance = (s.q_final - s.q_initial).norm();
  const double reach = s.num_slots * s.max_step();
  if (distance > reach + kFeasTol) {
    std::ostringstream msg;
    msg << "endpoints unreachable within T: |q_final - q_initial| = " << distance
        << " m exceeds N * delta * vmax = " << reach << " m";
    throw ValidationError(msg.str());
  }
}

void set_period(Scenario& scenario, double period) {
  scenario.period = period;
  scenario.num_slots = static_cast<int>(std::llround(period / scenario.slot_duration));
}

Scenario parse_scenario(std::string_view text) {
  Scenario s;
  std::optional<int> explicit_slots;
  bool have_period = false;

  using detail::parse_double;
  using Setter = std::function<void(std::string_view, std::string_view)>;
  const std::map<std::string, Setter, std::less<>> setters = {
      {"downlink_users",
       [&](auto k, auto v) { s.downlink_users = detail::parse_pair_list(v, k); }},
      {"uplink_users", [&](auto k, auto v) { s.uplink_users = detail::parse_pair_list(v, k); }},
      {"altitude_H", [&](auto k, auto v) { s.altitude = parse_double(v, k); }},
      {"period_T",
       [&](auto k, auto v) {
         s.period = parse_double(v, k);
         have_period = true;
       }},
      {"slot_duration_delta", [&](auto k, auto v) { s.slot_duration = parse_double(v, k); }},
      {"num_slots_N", [&](auto k, auto v) { explicit_slots = detail::parse_int(v, k); }},
      {"beta0", [&](auto k, auto v) { s.beta0 = parse_double(v, k); }},
      {"beta0_db", [&](auto k, auto v) { s.beta0 = db_to_linear(parse_double(v, k)); }},
      {"noise_power_sigma2", [&](auto k, auto v) { s.noise_power = parse_double(v, k); }},
      {"sigma2_dbm", [&](auto k, auto v) { s.noise_power = dbm_to_watts(parse_double(v, k)); }},
      {"pathloss_alpha", [&](auto k, auto v) { s.pathloss_alpha = parse_double(v, k); }},
      {"uav_tx_power_pb", [&](auto k, auto v) { s.uav_tx_power = parse_double(v, k); }},
      {"max_uplink_power_Pmax", [&](auto k, auto v) { s.max_uplink_power = parse_double(v, k); }},
      {"vmax", [&](auto k, auto v) { s.vmax = parse_double(v, k); }},
      {"q_initial", [&](auto k, auto v) { s.q_initial = detail::parse_pair(v, k); }},
      {"q_final", [&](auto k, auto v) { s.q_final = detail::parse_pair(v, k); }},
      {"self_interference_fb", [&](auto k, auto v) { s.self_interference = parse_double(v, k); }},
      {"fb_db", [&](auto k, auto v) { s.self_interference = db_to_linear(parse_double(v, k)); }},
      {"bandwidth_B", [&](auto k, auto v) { s.bandwidth = parse_double(v, k); }},
      {"tolerance_eps", [&](auto k, auto v) { s.tolerance = parse_double(v, k); }},
  };

  // Linear and dB spellings of the same quantity are mutually exclusive.
  const std::map<std::string, std::string, std::less<>> aliases = {
      {"beta0_db", "beta0"},
      {"sigma2_dbm", "noise_power_sigma2"},
      {"fb_db", "self_interference_fb"},
  };

  std::map<std::string, int, std::less<>> canonical_seen;
  for (const auto& kv : detail::parse_key_values(text)) {
    const auto it = setters.find(kv.key);
    if (it == setters.end()) {
      throw ParseError("line " + std::to_string(kv.line) + ": unknown key '" + kv.key + "'");
    }
    const auto alias = aliases.find(kv.key);
    const std::string canonical = alias == aliases.end() ? kv.key : alias->second;
    if (!canonical_seen.emplace(canonical, kv.line).second) {
      throw ParseError("line " + std::to_string(kv.line) + ": '" + kv.key +
                       "' duplicates an earlier " + canonical + " entry");
    }
    it->second(kv.key, kv.value);
  }

  for (const char* key : {"downlink_users", "uplink_users", "q_initial", "q_final"}) {
    if (!canonical_seen.contains(key)) {
      throw ParseError(std::string("missing required key '") + key + "'");
    }
  }

  if (have_period) {
    set_period(s, s.period);
    if (explicit_slots) s.num_slots = *explicit_slots;
  } else if (explicit_slots) {
    s.num_slots = *explicit_slots;
    s.period = s.num_slots * s.slot_duration;
  } else {
    set_period(s, s.period);
  }

  validate(s);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  return parse_scenario(detail::read_file(path));
}

std::string format_scenario(const Scenario& s) {
  using detail::format_double;
  std::string out;
  const auto line = [&out](std::string_view key, const std::string& value) {
    out.append(key).append(" = ").append(value).push_back('\n');
  };
  const auto users = [](const std::vector<Vec2>& list) {
    std::string text;
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (k) text += "; ";
      text += detail::format_pair(list[k]);
    }
    return text;
  };
  line("downlink_users", users(s.downlink_users));
  line("uplink_users", users(s.uplink_users));
  line("altitude_H", format_double(s.altitude));
  line("period_T", format_double(s.period));
  line("slot_duration_delta", format_double(s.slot_duration));
  line("num_slots_N", std::to_string(s.num_slots));
  line("beta0", format_double(s.beta0));
  line("noise_power_sigma2", format_double(s.noise_power));
  line("pathloss_alpha", format_double(s.pathloss_alpha));
  line("uav_tx_power_pb", format_double(s.uav_tx_power));
  line("max_uplink_power_Pmax", format_double(s.max_uplink_power));
  line("vmax", format_double(s.vmax));
  line("q_initial", detail::format_pair(s.q_initial));
  line("q_final", detail::format_pair(s.q_final));
  line("self_interference_fb", format_double(s.self_interference));
  line("bandwidth_B", format_double(s.bandwidth));
  line("tolerance_eps", format_double(s.tolerance));
  return out;
}

}  // namespace fduav
