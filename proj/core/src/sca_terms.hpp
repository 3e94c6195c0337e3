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

#ifndef FDUAV_SRC_SCA_TERMS_HPP
#define FDUAV_SRC_SCA_TERMS_HPP

#include <numbers>

namespace fduav::detail {

// Interference-plus-noise at an expansion point never drops below sigma^2
// analytically; anything under sigma^2 / 10 is numerical garbage.
inline double guard_floor(double interference, double noise) {
  return interference < 0.1 * noise ? noise : interference;
}

// d/dI of log2(1 + S / I), negated: S log2(e) / (I (I + S)).
inline double log_rate_slope(double signal, double interference) {
  return signal * std::numbers::log2e / (interference * (interference + signal));
}

}  // namespace fduav::detail

#endif  // FDUAV_SRC_SCA_TERMS_HPP
