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

#include "kv_text.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

namespace fduav::detail {

namespace {

std::string where(std::string_view key) { return "'" + std::string(key) + "'"; }

}  // namespace

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<KeyValue> parse_key_values(std::string_view text) {
  std::vector<KeyValue> out;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    KeyValue kv{std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))),
                line_no};
    if (kv.key.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": empty key");
    }
    if (!seen.insert(kv.key).second) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate key " + where(kv.key));
    }
    out.push_back(std::move(kv));
  }
  return out;
}

double parse_double(std::string_view text, std::string_view key) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError("bad number for " + where(key) + ": '" + std::string(text) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError("non-finite number for " + where(key));
  }
  return value;
}

int parse_int(std::string_view text, std::string_view key) {
  text = trim(text);
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError("bad integer for " + where(key) + ": '" + std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view text, std::string_view key) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ParseError("bad boolean for " + where(key) + ": '" + std::string(text) + "'");
}

Vec2 parse_pair(std::string_view text, std::string_view key) {
  text = trim(text);
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("expected 'x,y' for " + where(key) + ": '" + std::string(text) + "'");
  }
  return {parse_double(text.substr(0, comma), key), parse_double(text.substr(comma + 1), key)};
}

std::vector<Vec2> parse_pair_list(std::string_view text, std::string_view key) {
  std::vector<Vec2> out;
  text = trim(text);
  if (text.empty()) return out;

  std::vector<std::string_view> items;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    items.push_back(trim(text.substr(start, semi == std::string_view::npos ? semi : semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (items.back().empty()) items.pop_back();  // trailing ';'
  for (const auto item : items) {
    if (item.empty()) throw ParseError("empty position in list for " + where(key));
    out.push_back(parse_pair(item, key));
  }
  return out;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string format_pair(const Vec2& p) { return format_double(p.x()) + "," + format_double(p.y()); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path.string());
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("error while writing " + path.string());
}

}  // namespace fduav::detail
