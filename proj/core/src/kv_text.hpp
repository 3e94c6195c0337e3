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

#ifndef FDUAV_SRC_KV_TEXT_HPP
#define FDUAV_SRC_KV_TEXT_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fduav/scenario.hpp"

namespace fduav::detail {

struct KeyValue {
  std::string key;
  std::string value;
  int line = 0;
};

// "key = value" lines; '#' starts a comment. Duplicate keys and lines
// without '=' throw ParseError.
std::vector<KeyValue> parse_key_values(std::string_view text);

double parse_double(std::string_view text, std::string_view key);
int parse_int(std::string_view text, std::string_view key);
bool parse_bool(std::string_view text, std::string_view key);
Vec2 parse_pair(std::string_view text, std::string_view key);
std::vector<Vec2> parse_pair_list(std::string_view text, std::string_view key);

// Shortest representation that parses back to the same double.
std::string format_double(double value);
std::string format_pair(const Vec2& p);

std::string_view trim(std::string_view s);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace fduav::detail

#endif  // FDUAV_SRC_KV_TEXT_HPP
