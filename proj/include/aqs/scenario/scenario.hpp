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


#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "aqs/scenario/config.hpp"

namespace aqs {

inline constexpr int kExitExpected = 0;
inline constexpr int kExitDeviation = 1;
inline constexpr int kExitError = 2;

struct ScenarioInfo {
  std::string name;
  std::string description;
};

/// Alphabetical. Entries whose name contains `filter` (all if empty).
std::vector<ScenarioInfo> list_scenarios(std::string_view filter = {});

struct ScenarioResult {
  bool expected = false;
  /// Expected-outcome checks that did not hold.
  std::vector<std::string> deviations;
  /// Space-separated key=value pairs.
  std::string summary;
  /// Serialized transcript or attack report.
  std::string report;

  int exit_status() const { return expected ? kExitExpected : kExitDeviation; }
};

/// Runs the scenario without touching the filesystem.
ScenarioResult evaluate_scenario(const ScenarioConfig& config);

std::string default_report_name(const ScenarioConfig& config);
/// `config.output_path` if set, else `output_dir`/default_report_name().
std::string report_path(const ScenarioConfig& config, const std::string& output_dir);

/// Evaluates, writes the report to report_path(), prints the summary line
/// to `out` and returns the exit status. Throws Error on bad configs and
/// unwritable paths.
int run_scenario(const ScenarioConfig& config, const std::string& output_dir, std::ostream& out);

}  // namespace aqs
