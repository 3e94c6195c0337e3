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

#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fduav/fduav.hpp"

namespace fduav::cli {

namespace {

std::vector<Scheme> parse_scheme_list(const std::string& csv) {
  std::vector<Scheme> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ValidationError("empty scheme name in list");
    out.push_back(parse_scheme(item));
  }
  if (out.empty()) throw ValidationError("scheme list is empty");
  return out;
}

BcdSettings settings_or_default(const std::string& path) {
  return path.empty() ? BcdSettings{} : load_settings(path);
}

int worker_count() {
  const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return std::min(hw, sweep_threads_from_env(hw));
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Full-duplex UAV base station: joint scheduling, trajectory and power design",
               "fduav"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string settings_path;
  std::string out_dir;

  std::string scheme_name = "proposed";
  auto* solve = app.add_subcommand("solve", "Optimize one scenario with one scheme");
  solve->add_option("--scenario", scenario_path, "Scenario file")->required();
  solve->add_option("--scheme", scheme_name, "proposed|ideal|npc|straight|static|hd");
  solve->add_option("--settings", settings_path, "Solver settings file");
  solve->add_option("--out", out_dir, "Output directory")->required();

  std::string param_name;
  std::string values_text;
  std::string schemes_text = "proposed";
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep over one or more schemes");
  sweep->add_option("--param", param_name, "T|fb_db|H")->required();
  sweep->add_option("--values", values_text, "List, e.g. -170:-110:10 or 30,50,70")->required();
  sweep->add_option("--schemes", schemes_text, "Comma-separated scheme ids");
  sweep->add_option("--scenario", scenario_path, "Base scenario file")->required();
  sweep->add_option("--settings", settings_path, "Solver settings file");
  sweep->add_option("--out", out_dir, "Output directory")->required();

  std::string solution_path;
  auto* check = app.add_subcommand("check", "Validate a solution.json against its scenario");
  check->add_option("--scenario", scenario_path, "Scenario file")->required();
  check->add_option("--solution", solution_path, "solution.json")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fduav: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (solve->parsed()) {
      const Scenario scenario = load_scenario(scenario_path);
      const BcdSettings settings = settings_or_default(settings_path);
      const Scheme scheme = parse_scheme(scheme_name);
      const Solution sol = run_scheme(scheme, scenario, settings);
      export_solution(sol, scenario, out_dir);

      const double mbit = scenario.bandwidth * scenario.slot_duration / 1e6;
      out << std::setprecision(10) << "scheme " << to_string(scheme) << ": "
          << sol.iterations_used << " passes, objective " << sol.final_binary_objective
          << " bit/s/Hz summed over slots (" << sol.final_binary_objective * mbit
          << " Mbit; downlink " << sol.rates.downlink_per_slot.sum() * mbit << ", uplink "
          << sol.rates.uplink_per_slot.sum() * mbit << ")\n";
    } else if (sweep->parsed()) {
      SweepSpec spec;
      spec.param = parse_sweep_param(param_name);
      spec.values = parse_value_list(values_text);
      spec.schemes = parse_scheme_list(schemes_text);
      spec.base = load_scenario(scenario_path);
      spec.settings = settings_or_default(settings_path);
      spec.output_dir = out_dir;
      spec.threads = worker_count();

      const auto rows = run_sweep(spec);
      int failed = 0;
      for (const auto& r : rows) {
        if (!r.ok) {
          ++failed;
          err << "fduav: cell " << to_string(r.scheme) << " @ " << r.value << ": " << r.error
              << "\n";
        }
      }
      out << rows.size() << " cells, " << failed << " failed; summary in "
          << (spec.output_dir / "summary.csv").string() << "\n";
    } else if (check->parsed()) {
      const Scenario scenario = load_scenario(scenario_path);
      const Solution sol = load_solution(solution_path);
      const auto problems = check_solution(sol, scenario);
      for (const auto& p : problems) err << "fduav: " << p << "\n";
      if (!problems.empty()) return kExitValidation;
      out << "solution ok\n";
    }
  } catch (const IoError& e) {
    err << "fduav: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    // ParseError, ValidationError and anything the solver rejects.
    err << "fduav: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace fduav::cli
