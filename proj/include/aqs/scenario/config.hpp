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

#include <cstdint>
#include <string>
#include <string_view>

#include "aqs/adversary/attacks.hpp"

namespace aqs {

/// One scenario invocation. Every field can come from a flat config file
/// and be overridden on the command line.
struct ScenarioConfig {
  std::string scenario = "honest";
  Protocol protocol = Protocol::Zou;
  std::size_t n = 4;
  std::uint64_t seed = 0;
  CompareMode compare_mode = CompareMode::Exact;
  std::size_t swap_trials = 16;
  double tolerance = 1e-9;
  SigningMode signing_mode = SigningMode::NonCommutative;
  ForgedMessage forged = ForgedMessage::Random;
  /// "random", or qubits separated by ';', each "re(a), im(a), re(b), im(b)".
  std::string message_spec = "random";
  /// Empty means <output dir>/<default_report_name()>.
  std::string output_path;

  /// Throws Error on n == 0, zero swap trials, a non-positive tolerance or
  /// an explicit message of the wrong length.
  void validate() const;
};

/// Sets one field from its config-file spelling; unknown keys throw.
void apply_setting(ScenarioConfig& config, std::string_view key, std::string_view value);

/// Parses "key = value" lines on top of `base`. Blank lines and lines
/// starting with '#' are skipped.
ScenarioConfig parse_config(std::string_view text, ScenarioConfig base = {});
ScenarioConfig load_config(const std::string& path, ScenarioConfig base = {});

/// Empty for "random".
Message parse_message_spec(std::string_view spec);

ProtocolConfig protocol_config(const ScenarioConfig& config);

}  // namespace aqs
