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

#ifndef FDUAV_BASELINES_HPP
#define FDUAV_BASELINES_HPP

#include <array>
#include <string_view>

#include "fduav/bcd.hpp"

namespace fduav {

enum class Scheme {
  Proposed,
  IdealNoInterference,
  NoPowerControl,
  StraightFlight,
  Static,
  HalfDuplex,
};

inline constexpr std::array<Scheme, 6> kAllSchemes = {
    Scheme::Proposed,       Scheme::IdealNoInterference, Scheme::NoPowerControl,
    Scheme::StraightFlight, Scheme::Static,              Scheme::HalfDuplex};

// Canonical CLI names: proposed, ideal, npc, straight, static, hd.
std::string_view to_string(Scheme scheme);
// Also accepts a few long-form aliases. Throws ValidationError.
Scheme parse_scheme(std::string_view name);

// Centroid of all users, the minimizer of the summed squared distances.
Vec2 static_hover_point(const Scenario& scenario);

StagePlan plan_for(Scheme scheme, const Scenario& scenario);

Solution run_scheme(Scheme scheme, const Scenario& scenario, const BcdSettings& settings);

inline Solution run_proposed(const Scenario& s, const BcdSettings& b) {
  return run_scheme(Scheme::Proposed, s, b);
}
inline Solution run_ideal_no_interference(const Scenario& s, const BcdSettings& b) {
  return run_scheme(Scheme::IdealNoInterference, s, b);
}
inline Solution run_no_power_control(const Scenario& s, const BcdSettings& b) {
  return run_scheme(Scheme::NoPowerControl, s, b);
}
inline Solution run_straight_flight(const Scenario& s, const BcdSettings& b) {
  return run_scheme(Scheme::StraightFlight, s, b);
}
inline Solution run_static(const Scenario& s, const BcdSettings& b) {
  return run_scheme(Scheme::Static, s, b);
}
inline Solution run_half_duplex(const Scenario& s, const BcdSettings& b) {
  return run_scheme(Scheme::HalfDuplex, s, b);
}

}  // namespace fduav

#endif  // FDUAV_BASELINES_HPP
