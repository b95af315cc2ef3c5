// Copyright 2026 The aqs-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// aqs: runs arbitrated quantum signature scenarios from the command line.
//
//   aqs run --scenario key-extraction --protocol zou --n 4 --seed 7
//   aqs list [filter]
//
// Reports go to --out, or to $AQS_OUTPUT_DIR (default ".") under a name
// derived from the config. Exit status: 0 expected outcome, 1 deviation,
// 2 error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "aqs/scenario/scenario.hpp"

namespace {

constexpr const char* kOutputDirEnv = "AQS_OUTPUT_DIR";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arbitrated quantum signature simulator"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "Run one scenario and write its report");
  std::optional<std::string> config_path;
  std::vector<std::pair<std::string, std::optional<std::string>>> overrides = {
      {"scenario", {}}, {"protocol", {}},      {"n", {}},   {"seed", {}},
      {"compare_mode", {}}, {"swap_trials", {}}, {"out", {}},
  };
  run->add_option("--config", config_path, "Flat key = value config file");
  run->add_option("--scenario", overrides[0].second, "Scenario name (see `aqs list`)");
  run->add_option("--protocol", overrides[1].second, "li_bell, zou or improved");
  run->add_option("--n", overrides[2].second, "Qubits per message");
  run->add_option("--seed", overrides[3].second, "Run seed");
  run->add_option("--compare-mode", overrides[4].second, "exact or swap_test");
  run->add_option("--swap-trials", overrides[5].second, "Swap-test copies per comparison");
  run->add_option("--out", overrides[6].second, "Report path");

  CLI::App* list = app.add_subcommand("list", "List scenarios");
  std::string filter;
  list->add_option("filter", filter, "Substring to match");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : aqs::kExitError;
  }

  try {
    if (*list) {
      for (const auto& info : aqs::list_scenarios(filter)) std::cout << info.name << "\t" << info.description << '\n';
      return 0;
    }
    aqs::ScenarioConfig config;
    if (config_path) config = aqs::load_config(*config_path);
    for (const auto& [key, value] : overrides) {
      if (value) aqs::apply_setting(config, key, *value);
    }
    const char* dir = std::getenv(kOutputDirEnv);
    return aqs::run_scenario(config, dir ? dir : ".", std::cout);
  } catch (const std::exception& e) {
    std::cerr << "aqs: " << e.what() << '\n';
    return aqs::kExitError;
  }
}
