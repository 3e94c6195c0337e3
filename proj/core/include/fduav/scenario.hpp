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

#ifndef FDUAV_SCENARIO_HPP
#define FDUAV_SCENARIO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace fduav {

using Vec2 = Eigen::Vector2d;

// Malformed input text (bad number, bad pair, unknown key, ...).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a problem invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Filesystem failure while reading or writing.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ground-to-ground distances are clamped to this value (meters) before the
// d^-alpha path loss is applied. The reference gain beta0 is defined at 1 m.
inline constexpr double kMinGroundDistance = 1.0;

// Slack allowed on geometric constraints (meters).
inline constexpr double kFeasTol = 1e-9;

double db_to_linear(double value_db);
double linear_to_db(double ratio);
// dBm -> Watts.
double dbm_to_watts(double value_dbm);
double watts_to_dbm(double watts);

// One problem instance. Defaults are the radio parameters of the reference
// simulation setup; user positions have no default.
struct Scenario {
  std::vector<Vec2> downlink_users;  // w_j, meters
  std::vector<Vec2> uplink_users;    // w_i, meters

  double altitude = 100.0;      // H, meters
  double period = 30.0;         // T, seconds
  double slot_duration = 0.5;   // delta, seconds
  int num_slots = 60;           // N = T / delta

  double beta0 = 1e-6;             // channel gain at 1 m
  double noise_power = 1e-14;      // sigma^2, Watts
  double pathloss_alpha = 3.0;     // ground-to-ground exponent
  double uav_tx_power = 0.1;       // p_b, Watts
  double max_uplink_power = 0.1;   // P_max, Watts
  double vmax = 50.0;              // m/s
  Vec2 q_initial{0.0, 500.0};
  Vec2 q_final{1000.0, 500.0};
  double self_interference = 1e-13;  // f_b, Watts
  double bandwidth = 1e6;            // Hz, reporting only
  double tolerance = 1e-3;           // outer-loop relative stopping threshold

  int num_downlink() const { return static_cast<int>(downlink_users.size()); }
  int num_uplink() const { return static_cast<int>(uplink_users.size()); }
  // Largest horizontal displacement in one slot.
  double max_step() const { return vmax * slot_duration; }
};

// Throws ValidationError naming the first violated invariant.
void validate(const Scenario& scenario);

// Parses the key = value scenario format and validates the result.
Scenario parse_scenario(std::string_view text);

// Reads and parses a scenario file. Throws IoError if it cannot be read.
Scenario load_scenario(const std::filesystem::path& path);

// Writes the scenario in the same key = value format, linear units,
// full round-trip precision.
std::string format_scenario(const Scenario& scenario);

// Sets T and recomputes N from the slot duration. Does not validate.
void set_period(Scenario& scenario, double period);

}  // namespace fduav

#endif  // FDUAV_SCENARIO_HPP
