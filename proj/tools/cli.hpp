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

#ifndef FDUAV_TOOLS_CLI_HPP
#define FDUAV_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fduav::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

// Entry point of the fduav tool. args excludes the program name.
//   fduav solve --scenario <path> --scheme <id> [--settings <path>] --out <dir>
//   fduav sweep --param <T|fb_db|H> --values <list> --schemes <csv>
//               --scenario <path> [--settings <path>] --out <dir>
//   fduav check --scenario <path> --solution <solution.json>
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fduav::cli

#endif  // FDUAV_TOOLS_CLI_HPP
