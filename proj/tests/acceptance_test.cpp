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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "aqs/core/bell.hpp"
#include "aqs/scenario/scenario.hpp"
#include "oracles.hpp"

namespace aqs {
namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Verdict qotp_roundtrip() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1001);
  double worst = 1.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    StateRegister reg(trial);
    const Message m = random_message(n, rng);
    const Key key = Key::random(2 * n, KeyLabel::Other, rng);
    const HandleSeq hs = prepare_message(reg, m, Party::Alice);
    qotp_encrypt(reg, key, hs);
    qotp_decrypt(reg, key, hs);
    worst = std::min(worst, reg.fidelity(hs, message_vector(m)));
  }
  const double elapsed = seconds_since(t0);
  return {worst >= 1.0 - 1e-9 && elapsed < 1.0, fmt("min fidelity %.12f, %.3f s", worst, elapsed)};
}

Verdict bell_key_table() {
  int matched = 0;
  double worst_entry = 0;
  for (const auto& e : testing::kBellKeyTable) {
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      StateRegister reg(seed);
      auto [t, h] = reg.make_bell_pair(e.initial);
      qotp_encrypt(reg, Key({e.z, e.x}, KeyLabel::Other), std::array{t});
      const Eigen::VectorXcd want = e.sign * testing::literal_bell(e.result);
      const double diff = (reg.class_vector(t) - want).cwiseAbs().maxCoeff();
      worst_entry = std::max(worst_entry, diff);
      const double born = std::norm(testing::literal_bell(e.result).dot(reg.class_vector(t)));
      ok = ok && diff <= 1e-12 && born >= 1.0 - 1e-12 && reg.bell_measure(t, h) == e.result;
    }
    matched += ok;
  }
  return {matched == 16, fmt("%.0f/16 entries, max entry error %.2e", matched, worst_entry)};
}

Verdict teleportation() {
  std::mt19937_64 rng(2002);
  double worst = 1.0;
  for (int trial = 0; trial < 100; ++trial) {
    StateRegister reg(5000 + trial);
    const Message m = random_message(1, rng);
    const HandleSeq msg = prepare_message(reg, m, Party::Alice);
    auto [a, b] = reg.make_bell_pair(BellKind::PhiPlus, Party::Alice, Party::Bob);
    reg.apply_pauli(b, teleport_correction(reg.bell_measure(msg[0], a)));
    worst = std::min(worst, reg.fidelity(std::array{b}, message_vector(m)));
  }
  return {worst >= 1.0 - 1e-9, fmt("min fidelity %.12f over 100 messages", worst)};
}

Verdict honest_completeness() {
  const auto t0 = Clock::now();
  int ok = 0, total = 0;
  for (Protocol p : {Protocol::LiBell, Protocol::Zou, Protocol::Improved}) {
    for (std::size_t n : {2u, 4u, 8u}) {
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        ProtocolConfig c;
        c.n = n;
        c.seed = seed;
        const RunResult r = run_protocol(p, c);
        const Transcript& t = r.transcript;
        ++total;
        ok += t.outcome == Outcome::Accepted && t.verdicts.all_defined_pass() && t.recovered_fidelity &&
              *t.recovered_fidelity >= 1.0 - 1e-9;
      }
    }
  }
  const double elapsed = seconds_since(t0);
  return {ok == total && elapsed < 10.0, fmt("%.0f/%.0f runs accepted, %.2f s", ok, total, elapsed)};
}

AttackConfig attack(Protocol p, std::size_t n, std::uint64_t seed) {
  AttackConfig c;
  c.target = p;
  c.protocol.n = n;
  c.protocol.seed = seed;
  return c;
}

Verdict key_extraction_zou() {
  int exact = 0, accepted = 0, invalid = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AttackReport r = key_extraction_attack(attack(Protocol::Zou, 4, seed));
    exact += r.key_recovery_exact && r.recovered_key_bits.size() == 8;
    accepted += r.transcript.outcome == Outcome::Accepted;
    invalid += r.dispute_ruling == Ruling::SignatureInvalid;
  }
  return {exact == 100 && accepted == 100 && invalid == 100,
          fmt("8-bit recovery %.0f/100, accepted %.0f/100, signature_invalid %.0f/100", exact, accepted, invalid)};
}

Verdict total_break_li() {
  int exact = 0, forged = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AttackReport r = total_break_attack(attack(Protocol::LiBell, 2, seed));
    exact += r.key_recovery_exact && r.recovered_key_bits.size() == 16;
    forged += r.forgery_accepted;
  }
  return {exact == 100 && forged == 100, fmt("16-bit recovery %.0f/100, forgery accepted %.0f/100", exact, forged)};
}

Verdict improved_detection() {
  int ke_v1 = 0, gao_v3 = 0, gao_zou = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AttackReport ke = key_extraction_attack(attack(Protocol::Improved, 4, seed));
    ke_v1 += ke.detected_at_step == Step::V1 && ke.transcript.outcome != Outcome::Accepted;
    const AttackReport gi = gao_disturbance_attack(attack(Protocol::Improved, 4, seed));
    gao_v3 += gi.detected_at_step == Step::V3;
    const AttackReport gz = gao_disturbance_attack(attack(Protocol::Zou, 4, seed));
    gao_zou += gz.transcript.outcome == Outcome::Accepted && gz.dispute_ruling == Ruling::SignatureInvalid;
  }
  return {ke_v1 == 100 && gao_v3 == 100 && gao_zou == 100,
          fmt("substitution stopped at V1 %.0f/100, disturbance caught at V3 %.0f/100, "
              "zou accepted then signature_invalid %.0f/100",
              ke_v1, gao_v3, gao_zou)};
}

Verdict swap_test_statistics() {
  const Eigen::Vector2cd psi(Complex(0.6, 0.0), Complex(0.0, 0.8));
  const double oracle = testing::swap_test_pass_probability(0.5 * Eigen::Matrix2cd::Identity(), psi * psi.adjoint());
  StateRegister reg(31337);
  int passes = 0;
  constexpr int kTrials = 10000;
  for (int i = 0; i < kTrials; ++i) {
    auto [t, h] = reg.make_bell_pair(BellKind::PhiPlus);
    const QubitHandle p = reg.alloc_qubit(psi(0), psi(1));
    passes += swap_test(reg, std::array{t}, std::array{p});
    reg.discard(std::array{h});
  }
  const double freq = passes / double(kTrials);
  return {std::abs(freq - 0.75) <= 0.02 && std::abs(oracle - 0.75) < 1e-12,
          fmt("pass frequency %.4f (oracle %.4f, target 0.75 +/- 0.02)", freq, oracle)};
}

Verdict determinism() {
  int identical = 0, total = 0;
  const std::pair<const char*, Protocol> cases[] = {
      {"honest", Protocol::LiBell},          {"honest", Protocol::Zou},          {"honest", Protocol::Improved},
      {"dispute", Protocol::Zou},            {"dispute", Protocol::Improved},    {"key-extraction", Protocol::Zou},
      {"key-extraction", Protocol::Improved}, {"total-break", Protocol::LiBell}, {"total-break", Protocol::Improved},
      {"gao-disturbance", Protocol::Zou},    {"gao-disturbance", Protocol::Improved},
  };
  for (const auto& [name, p] : cases) {
    for (CompareMode mode : {CompareMode::Exact, CompareMode::SwapTest}) {
      ScenarioConfig c;
      c.scenario = name;
      c.protocol = p;
      c.n = 3;
      c.seed = 2024;
      c.compare_mode = mode;
      const ScenarioResult a = evaluate_scenario(c), b = evaluate_scenario(c);
      ++total;
      identical += a.report == b.report && a.summary == b.summary;
    }
  }
  return {identical == total, fmt("%.0f/%.0f scenario reruns byte-identical", identical, total)};
}

}  // namespace
}  // namespace aqs

int main() {
  using namespace aqs;
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"QOTP roundtrip", qotp_roundtrip},
      {"Bell/key table reproduction", bell_key_table},
      {"teleportation recovery", teleportation},
      {"honest completeness", honest_completeness},
      {"key extraction against Zou", key_extraction_zou},
      {"total break against Li", total_break_li},
      {"improved-protocol detection", improved_detection},
      {"swap-test statistics", swap_test_statistics},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first, v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
