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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "fduav/experiments.hpp"
#include "kv_text.hpp"

namespace fduav {

std::string_view to_string(SweepParam param) {
  switch (param) {
    case SweepParam::Period:
      return "T";
    case SweepParam::SelfInterferenceDb:
      return "fb_db";
    case SweepParam::Altitude:
      return "H";
  }
  return "unknown";
}

SweepParam parse_sweep_param(std::string_view name) {
  if (name == "T" || name == "period_T") return SweepParam::Period;
  if (name == "fb_db" || name == "self_interference_fb_db") return SweepParam::SelfInterferenceDb;
  if (name == "H" || name == "altitude_H") return SweepParam::Altitude;
  throw ValidationError("unknown sweep parameter '" + std::string(name) +
                        "' (expected T, fb_db or H)");
}

std::vector<double> parse_value_list(std::string_view text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = detail::trim(
        text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (item.empty()) throw ParseError("empty item in value list");

    if (item.find(':') == std::string_view::npos) {
      values.push_back(detail::parse_double(item, "values"));
    } else {
      const auto c1 = item.find(':');
      const auto c2 = item.find(':', c1 + 1);
      if (c2 == std::string_view::npos || item.find(':', c2 + 1) != std::string_view::npos) {
        throw ParseError("range must be start:stop:step, got '" + std::string(item) + "'");
      }
      const double first = detail::parse_double(item.substr(0, c1), "values");
      const double last = detail::parse_double(item.substr(c1 + 1, c2 - c1 - 1), "values");
      const double step = detail::parse_double(item.substr(c2 + 1), "values");
      if (step == 0.0 || (last - first) / step < 0.0) {
        throw ParseError("range '" + std::string(item) + "' never reaches its stop value");
      }
      const auto count = static_cast<long>(std::floor((last - first) / step + 1e-9)) + 1;
      if (count > 100000) throw ParseError("range '" + std::string(item) + "' is too long");
      for (long k = 0; k < count; ++k) values.push_back(first + static_cast<double>(k) * step);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

Scenario apply_sweep_value(const Scenario& base, SweepParam param, double value) {
  Scenario s = base;
  switch (param) {
    case SweepParam::Period:
      set_period(s, value);
      break;
    case SweepParam::SelfInterferenceDb:
      s.self_interference = db_to_linear(value);
      break;
    case SweepParam::Altitude:
      s.altitude = value;
      break;
  }
  validate(s);
  return s;
}

int sweep_threads_from_env(int fallback) {
  const char* env = std::getenv("FDUAV_THREADS");
  if (env == nullptr) return fallback;
  try {
    const int n = detail::parse_int(env, "FDUAV_THREADS");
    return n >= 1 ? n : fallback;
  } catch (const ParseError&) {
    return fallback;
  }
}

namespace {

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += (c == '\n' || c == '\r') ? ' ' : c;
  }
  out += '"';
  return out;
}

int scheme_rank(Scheme s) {
  return static_cast<int>(std::find(kAllSchemes.begin(), kAllSchemes.end(), s) -
                          kAllSchemes.begin());
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.values.empty()) throw ValidationError("sweep value list is empty");
  if (spec.schemes.empty()) throw ValidationError("sweep scheme list is empty");
  spec.settings.validate();

  std::vector<Scheme> schemes = spec.schemes;
  std::stable_sort(schemes.begin(), schemes.end(),
                   [](Scheme a, Scheme b) { return scheme_rank(a) < scheme_rank(b); });
  schemes.erase(std::unique(schemes.begin(), schemes.end()), schemes.end());
  std::vector<double> values = spec.values;
  std::stable_sort(values.begin(), values.end());
  // Repeated cells would share an output directory.
  values.erase(std::unique(values.begin(), values.end()), values.end());

  struct Cell {
    std::size_t value_index;
    SweepRow row;
  };
  std::vector<Cell> cells;
  for (const Scheme scheme : schemes) {
    for (std::size_t k = 0; k < values.size(); ++k) {
      SweepRow row;
      row.scheme = scheme;
      row.value = values[k];
      cells.push_back({k, row});
    }
  }

  const auto run_cell = [&](Cell& cell) {
    SweepRow& row = cell.row;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Scenario scenario = apply_sweep_value(spec.base, spec.param, row.value);
      const Solution sol = run_scheme(row.scheme, scenario, spec.settings);
      row.binary_objective = sol.final_binary_objective;
      row.relaxed_objective = sol.final_relaxed_objective;
      row.iterations = sol.iterations_used;
      row.ok = true;
      if (!spec.output_dir.empty()) {
        export_solution(sol, scenario,
                        spec.output_dir / "cells" /
                            (std::string(to_string(row.scheme)) + "_" +
                             std::to_string(cell.value_index)));
      }
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    row.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  const int threads = std::clamp(spec.threads, 1, static_cast<int>(cells.size()));
  if (threads == 1) {
    for (auto& cell : cells) run_cell(cell);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < cells.size(); k = next++) run_cell(cells[k]);
      });
    }
  }

  std::vector<SweepRow> rows;
  rows.reserve(cells.size());
  for (auto& cell : cells) rows.push_back(std::move(cell.row));

  if (!spec.output_dir.empty()) {
    using detail::format_double;
    std::error_code ec;
    std::filesystem::create_directories(spec.output_dir, ec);
    if (ec) throw IoError("cannot create " + spec.output_dir.string() + ": " + ec.message());

    std::ostringstream summary;
    summary << "scheme,param,value,status,binary_objective,relaxed_objective,iterations,error\n";
    std::ostringstream timings;
    timings << "scheme,param,value,wall_seconds\n";
    for (const auto& r : rows) {
      summary << to_string(r.scheme) << ',' << to_string(spec.param) << ','
              << format_double(r.value) << ',' << (r.ok ? "ok" : "error") << ','
              << (r.ok ? format_double(r.binary_objective) : "") << ','
              << (r.ok ? format_double(r.relaxed_objective) : "") << ','
              << (r.ok ? std::to_string(r.iterations) : "") << ',' << csv_field(r.error)
              << '\n';
      timings << to_string(r.scheme) << ',' << to_string(spec.param) << ','
              << format_double(r.value) << ',' << format_double(r.wall_seconds) << '\n';
    }
    detail::write_file(spec.output_dir / "summary.csv", summary.str());
    detail::write_file(spec.output_dir / "timings.csv", timings.str());
  }
  return rows;
}

}  // namespace fduav
