// Copyright 2026 The locfree Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "locfree/commands.hpp"

namespace {

struct Flag {
  const char* key;
  const char* help;
  std::string value;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace locfree;

  CLI::App app{"Exact counting, enumeration and spectral analysis of words in locally free groups"};
  app.require_subcommand(1);

  std::vector<Flag> flags{
      {"flavor", "lf1, lf2, free1 or free2", {}},
      {"n", "group size", {}},
      {"n-range", "sweep of n, a:b", {}},
      {"mu", "word length", {}},
      {"mu-range", "sweep of word lengths, a:b", {}},
      {"m-max", "largest m of the theta table", {}},
      {"tol", "spectral tolerance", {}},
      {"cap", "maximum stored classes per BFS level", {}},
      {"format", "csv, json or table", {}},
      {"out", "output file (report: output directory)", {}},
      {"seed", "seed for randomized checks", {}},
      {"dedup", "BFS canonicalizer: rewrite, stack or both", {}},
      {"golden-dir", "directory holding golden tables", {}},
  };
  std::string config_path;
  bool include_m0 = true;
  bool quick = false;

  for (auto& f : flags) app.add_option(std::string("--") + f.key, f.value, f.help);
  auto* inc = app.add_flag("--include-m0,!--no-include-m0", include_m0,
                           "count the m = 0 term of the assembly (default on)");
  auto* quick_flag = app.add_flag("--quick", quick, "report: small-instance subset");
  app.add_option("--config", config_path, "key = value config file");

  std::string command;
  for (const char* name : {"count", "oracle", "spectral", "asympt", "report"}) {
    static const std::vector<std::pair<std::string, std::string>> about{
        {"count", "exact word counts from the theta recursion"},
        {"oracle", "breadth-first sphere sizes checked against the counts"},
        {"spectral", "dominant eigenvalues and the 2D root"},
        {"asympt", "asymptotic formulas next to exact counts"},
        {"report", "run every acceptance criterion and write a bundle"}};
    std::string desc;
    for (const auto& [k, v] : about)
      if (k == name) desc = v;
    app.add_subcommand(name, desc)->fallthrough()->callback([&command, name] { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    for (const auto& f : flags)
      if (app.count(std::string("--") + f.key) > 0) apply_setting(cfg, f.key, f.value);
    if (inc->count() > 0) cfg.include_m0 = include_m0;
    if (quick_flag->count() > 0) cfg.quick = quick;
    cfg.command = command;

    CommandOutput result = run_command(cfg);
    const std::string text = result.table.render(cfg.format);
    if (cfg.command == "report" || cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + cfg.out + "'");
      file << text;
    }
    for (const auto& m : result.messages) std::cerr << m << '\n';
    return result.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
}
