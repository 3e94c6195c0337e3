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

#ifndef FDUAV_FDUAV_HPP
#define FDUAV_FDUAV_HPP

#include "fduav/baselines.hpp"
#include "fduav/bcd.hpp"
#include "fduav/channel.hpp"
#include "fduav/experiments.hpp"
#include "fduav/rates.hpp"
#include "fduav/scenario.hpp"
#include "fduav/subproblems.hpp"
#include "fduav/variables.hpp"

#endif  // FDUAV_FDUAV_HPP
