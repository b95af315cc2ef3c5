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


#include "aqs/scenario/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace aqs {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error("invalid value for " + std::string(key) + ": '" + std::string(text) + "'");
  }
  return value;
}

ForgedMessage forged_from_string(std::string_view s) {
  if (s == "random") return ForgedMessage::Random;
  if (s == "orthogonal") return ForgedMessage::OrthogonalToOriginal;
  throw Error("unknown forged message kind: " + std::string(s));
}

}  // namespace

void ScenarioConfig::validate() const {
  if (n == 0) throw Error("n must be at least 1");
  if (compare_mode == CompareMode::SwapTest && swap_trials == 0) throw Error("swap_trials must be at least 1");
  if (!(tolerance > 0.0)) throw Error("tolerance must be positive");
  const Message m = parse_message_spec(message_spec);
  if (!m.empty() && m.size() != n) {
    throw Error("message has " + std::to_string(m.size()) + " qubits, expected " + std::to_string(n));
  }
}

void apply_setting(ScenarioConfig& c, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "scenario") {
    c.scenario = value;
  } else if (key == "protocol") {
    c.protocol = protocol_from_string(value);
  } else if (key == "n") {
    c.n = parse_number<std::size_t>(key, value);
  } else if (key == "seed") {
    c.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "compare_mode" || key == "compare-mode") {
    c.compare_mode = compare_mode_from_string(value);
  } else if (key == "swap_trials" || key == "swap-trials") {
    c.swap_trials = parse_number<std::size_t>(key, value);
  } else if (key == "tolerance") {
    c.tolerance = parse_number<double>(key, value);
  } else if (key == "signing_mode" || key == "signing-mode") {
    c.signing_mode = signing_mode_from_string(value);
  } else if (key == "forged") {
    c.forged = forged_from_string(value);
  } else if (key == "message") {
    c.message_spec = value;
  } else if (key == "out" || key == "output_path") {
    c.output_path = value;
  } else {
    throw Error("unknown config key: " + std::string(key));
  }
}

ScenarioConfig parse_config(std::string_view text, ScenarioConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error("config line " + std::to_string(line_no) + ": expected key = value");
    }
    apply_setting(base, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

ScenarioConfig load_config(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base));
}

Message parse_message_spec(std::string_view spec) {
  spec = trim(spec);
  if (spec == "random" || spec.empty()) return {};
  Message out;
  while (true) {
    const auto semi = spec.find(';');
    std::string_view qubit = spec.substr(0, semi);
    double v[4];
    for (int i = 0; i < 4; ++i) {
      const auto comma = qubit.find(',');
      if ((i < 3) == (comma == std::string_view::npos)) {
        throw Error("each message qubit needs four comma-separated reals");
      }
      v[i] = parse_number<double>("message", trim(qubit.substr(0, comma)));
      qubit = i < 3 ? qubit.substr(comma + 1) : std::string_view{};
    }
    out.push_back(QubitState{{v[0], v[1]}, {v[2], v[3]}});
    if (semi == std::string_view::npos) break;
    spec = spec.substr(semi + 1);
  }
  return out;
}

ProtocolConfig protocol_config(const ScenarioConfig& c) {
  ProtocolConfig pc;
  pc.n = c.n;
  pc.seed = c.seed;
  pc.message = parse_message_spec(c.message_spec);
  pc.compare = CompareOptions{c.compare_mode, c.tolerance, c.swap_trials};
  pc.signing_mode = c.signing_mode;
  return pc;
}

}  // namespace aqs
