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

#include "fduav/baselines.hpp"

#include <string>

namespace fduav {

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::Proposed:
      return "proposed";
    case Scheme::IdealNoInterference:
      return "ideal";
    case Scheme::NoPowerControl:
      return "npc";
    case Scheme::StraightFlight:
      return "straight";
    case Scheme::Static:
      return "static";
    case Scheme::HalfDuplex:
      return "hd";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  for (const Scheme s : kAllSchemes) {
    if (name == to_string(s)) return s;
  }
  if (name == "ideal_no_interference") return Scheme::IdealNoInterference;
  if (name == "no_power_control") return Scheme::NoPowerControl;
  if (name == "straight_flight") return Scheme::StraightFlight;
  if (name == "half_duplex") return Scheme::HalfDuplex;
  throw ValidationError("unknown scheme '" + std::string(name) +
                        "' (expected proposed, ideal, npc, straight, static, hd)");
}

Vec2 static_hover_point(const Scenario& scenario) {
  Vec2 sum = Vec2::Zero();
  for (const auto& w : scenario.downlink_users) sum += w;
  for (const auto& w : scenario.uplink_users) sum += w;
  return sum / static_cast<double>(scenario.num_downlink() + scenario.num_uplink());
}

StagePlan plan_for(Scheme scheme, const Scenario& scenario) {
  StagePlan plan;
  switch (scheme) {
    case Scheme::Proposed:
      break;
    case Scheme::IdealNoInterference:
      plan.model = LinkModel::ideal_no_interference();
      break;
    case Scheme::NoPowerControl:
      plan.power = false;
      break;
    case Scheme::StraightFlight:
      plan.trajectory = false;
      break;
    case Scheme::Static: {
      // Hovering; the q_I / q_F endpoint constraints do not apply.
      plan.trajectory = false;
      Trajectory hover;
      hover.waypoints.assign(scenario.num_slots + 1, static_hover_point(scenario));
      plan.fixed_trajectory = std::move(hover);
      break;
    }
    case Scheme::HalfDuplex:
      plan.model = LinkModel::half_duplex();
      break;
  }
  return plan;
}

Solution run_scheme(Scheme scheme, const Scenario& scenario, const BcdSettings& settings) {
  Solution sol = run(scenario, settings, plan_for(scheme, scenario));
  sol.scheme = std::string(to_string(scheme));
  return sol;
}

}  // namespace fduav
