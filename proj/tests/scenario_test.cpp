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


#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "aqs/scenario/scenario.hpp"

namespace aqs {
namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ScenarioConfig scenario(std::string name, Protocol p, std::size_t n, std::uint64_t seed) {
  ScenarioConfig c;
  c.scenario = std::move(name);
  c.protocol = p;
  c.n = n;
  c.seed = seed;
  return c;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("aqs-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

TEST(Config, ParsesFlatKeyValue) {
  const ScenarioConfig c = parse_config(
      "# sample\n"
      "scenario = key-extraction\n"
      "protocol = improved\n"
      "\n"
      "n = 3\n"
      "seed=99\n"
      "compare_mode = swap_test\n"
      "swap_trials = 4\n"
      "signing_mode = pauli\n"
      "forged = orthogonal\n"
      "message = 1,0,0,0; 0,0,1,0 ; 0.6,0,0,0.8\n"
      "out = r.txt\n");
  EXPECT_EQ(c.scenario, "key-extraction");
  EXPECT_EQ(c.protocol, Protocol::Improved);
  EXPECT_EQ(c.n, 3u);
  EXPECT_EQ(c.seed, 99u);
  EXPECT_EQ(c.compare_mode, CompareMode::SwapTest);
  EXPECT_EQ(c.swap_trials, 4u);
  EXPECT_EQ(c.signing_mode, SigningMode::Pauli);
  EXPECT_EQ(c.forged, ForgedMessage::OrthogonalToOriginal);
  EXPECT_EQ(c.output_path, "r.txt");
  EXPECT_NO_THROW(c.validate());
  const Message m = parse_message_spec(c.message_spec);
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m[2].beta, Complex(0, 0.8));
}

TEST(Config, OverridesApplyOnTopOfFile) {
  ScenarioConfig c = parse_config("n = 3\nseed = 1\n");
  apply_setting(c, "seed", "5");
  EXPECT_EQ(c.n, 3u);
  EXPECT_EQ(c.seed, 5u);
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(parse_config("colour = blue\n"), Error);
  EXPECT_THROW(parse_config("n 4\n"), Error);
  EXPECT_THROW(parse_config("n = four\n"), Error);
  EXPECT_THROW(parse_config("n = -1\n"), Error);
  EXPECT_THROW(parse_config("protocol = bb84\n"), Error);
  EXPECT_THROW(parse_message_spec("1,0,0"), Error);
  EXPECT_THROW(parse_message_spec("1,0,0,0,0"), Error);
  EXPECT_THROW(load_config("/nonexistent/aqs.cfg"), Error);
}

TEST(Config, ValidateChecksInvariants) {
  ScenarioConfig c;
  c.n = 0;
  EXPECT_THROW(c.validate(), Error);
  c = ScenarioConfig{};
  c.compare_mode = CompareMode::SwapTest;
  c.swap_trials = 0;
  EXPECT_THROW(c.validate(), Error);
  c = ScenarioConfig{};
  c.n = 2;
  c.message_spec = "1,0,0,0";
  EXPECT_THROW(c.validate(), Error);
}

TEST(ListScenarios, FullCatalogIsAlphabetical) {
  const auto all = list_scenarios();
  std::vector<std::string> names;
  for (const auto& s : all) names.push_back(s.name);
  EXPECT_EQ(names, (std::vector<std::string>{"dispute", "gao-disturbance", "honest", "key-extraction", "total-break"}));
  for (const auto& s : all) EXPECT_FALSE(s.description.empty());
  EXPECT_EQ(list_scenarios("").size(), all.size());
}

TEST(ListScenarios, Filter) {
  EXPECT_TRUE(list_scenarios("no-such").empty());
  const auto hit = list_scenarios("break");
  ASSERT_EQ(hit.size(), 1u);
  EXPECT_EQ(hit[0].name, "total-break");
}

TEST(RunScenario, HonestZouSummary) {
  const ScenarioResult r = evaluate_scenario(scenario("honest", Protocol::Zou, 4, 7));
  EXPECT_EQ(r.exit_status(), 0);
  EXPECT_NE(r.summary.find("outcome=accepted V_T=1 V_B=1 fidelity=1.000000000"), std::string::npos) << r.summary;
}

TEST(RunScenario, KeyExtractionZouSummary) {
  const ScenarioResult r = evaluate_scenario(scenario("key-extraction", Protocol::Zou, 4, 7));
  EXPECT_EQ(r.exit_status(), 0);
  EXPECT_NE(r.summary.find("key_bits=8/8"), std::string::npos) << r.summary;
  EXPECT_NE(r.summary.find("disavowal_upheld=true"), std::string::npos);
}

TEST(RunScenario, KeyExtractionImprovedSummary) {
  const ScenarioResult r = evaluate_scenario(scenario("key-extraction", Protocol::Improved, 4, 7));
  EXPECT_EQ(r.exit_status(), 0);
  EXPECT_NE(r.summary.find("detected_at_step=V1"), std::string::npos) << r.summary;
}

TEST(RunScenario, EveryApplicablePairMeetsExpectations) {
  const std::pair<const char*, Protocol> cases[] = {
      {"honest", Protocol::LiBell},       {"honest", Protocol::Zou},
      {"honest", Protocol::Improved},     {"dispute", Protocol::Zou},
      {"dispute", Protocol::Improved},    {"key-extraction", Protocol::Zou},
      {"key-extraction", Protocol::Improved}, {"total-break", Protocol::LiBell},
      {"total-break", Protocol::Improved},    {"gao-disturbance", Protocol::Zou},
      {"gao-disturbance", Protocol::Improved},
  };
  for (const auto& [name, p] : cases) {
    const ScenarioResult r = evaluate_scenario(scenario(name, p, 2, 3));
    EXPECT_TRUE(r.expected) << name << " " << to_string(p) << ": " << r.summary;
    EXPECT_EQ(r.report.rfind(std::string(kReportFormatHeader), 0), 0u);
  }
}

TEST(RunScenario, InapplicablePairsAreErrors) {
  EXPECT_THROW(evaluate_scenario(scenario("dispute", Protocol::LiBell, 2, 1)), Error);
  EXPECT_THROW(evaluate_scenario(scenario("key-extraction", Protocol::LiBell, 2, 1)), Error);
  EXPECT_THROW(evaluate_scenario(scenario("total-break", Protocol::Zou, 2, 1)), Error);
  EXPECT_THROW(evaluate_scenario(scenario("gao-disturbance", Protocol::LiBell, 2, 1)), Error);
  EXPECT_THROW(evaluate_scenario(scenario("nope", Protocol::Zou, 2, 1)), Error);
  EXPECT_THROW(evaluate_scenario(scenario("honest", Protocol::Zou, 0, 1)), Error);
}

TEST(RunScenario, DeviationGivesNonzeroExit) {
  // One swap-test sample misses a disturbed qubit with probability 1/2, so
  // some seeds fail the expected V3 detection.
  int deviations = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    ScenarioConfig c = scenario("gao-disturbance", Protocol::Improved, 1, seed);
    c.compare_mode = CompareMode::SwapTest;
    c.swap_trials = 1;
    const ScenarioResult r = evaluate_scenario(c);
    EXPECT_EQ(r.expected, r.deviations.empty());
    if (!r.expected) {
      ++deviations;
      EXPECT_NE(r.exit_status(), 0);
      EXPECT_NE(r.summary.find("expected=false"), std::string::npos);
    }
  }
  EXPECT_GT(deviations, 0);
}

TEST(RunScenario, WritesReportAndPrintsSummary) {
  TempDir dir;
  ScenarioConfig c = scenario("honest", Protocol::Improved, 2, 1);
  std::ostringstream out;
  EXPECT_EQ(run_scenario(c, dir.path().string(), out), 0);
  const fs::path written = dir.path() / default_report_name(c);
  ASSERT_TRUE(fs::exists(written));
  EXPECT_EQ(read_file(written), evaluate_scenario(c).report);
  EXPECT_EQ(out.str(), evaluate_scenario(c).summary + "\n");
}

TEST(RunScenario, ExplicitOutputPathWins) {
  TempDir dir;
  ScenarioConfig c = scenario("honest", Protocol::Zou, 2, 1);
  c.output_path = (dir.path() / "mine.txt").string();
  std::ostringstream out;
  run_scenario(c, "/nonexistent", out);
  EXPECT_TRUE(fs::exists(dir.path() / "mine.txt"));
}

TEST(RunScenario, UnwritablePathIsAnError) {
  ScenarioConfig c = scenario("honest", Protocol::Zou, 2, 1);
  c.output_path = "/nonexistent-dir/report.txt";
  std::ostringstream out;
  EXPECT_THROW(run_scenario(c, ".", out), Error);
}

TEST(RunScenario, SameConfigFileGivesIdenticalBytes) {
  TempDir dir;
  const fs::path cfg = dir.path() / "run.cfg";
  std::ofstream(cfg) << "scenario = total-break\nprotocol = li_bell\nn = 2\nseed = 12\n";
  for (int i = 0; i < 2; ++i) {
    ScenarioConfig c = load_config(cfg.string());
    c.output_path = (dir.path() / ("out" + std::to_string(i) + ".txt")).string();
    std::ostringstream out;
    EXPECT_EQ(run_scenario(c, ".", out), 0);
  }
  EXPECT_EQ(read_file(dir.path() / "out0.txt"), read_file(dir.path() / "out1.txt"));
  EXPECT_FALSE(read_file(dir.path() / "out0.txt").empty());
}

}  // namespace
}  // namespace aqs
