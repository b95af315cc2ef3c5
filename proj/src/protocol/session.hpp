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

#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "aqs/protocol/engine.hpp"

namespace aqs::detail {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

HandleSeq concat(std::span<const QubitHandle> a, std::span<const QubitHandle> b);
HandleSeq slice(std::span<const QubitHandle> s, std::size_t offset, std::size_t count);

/// Prepares one Bell pair per outcome; the result is 2 * outcomes.size() qubits.
HandleSeq encode_bell_outcomes(StateRegister& reg, std::span<const BellKind> outcomes, Party owner);
std::string describe(std::span<const BellKind> outcomes);

/// State shared by one protocol run: the register, parties, transcript and
/// the channel through which every message passes.
class Session {
 public:
  Session(Protocol protocol, const ProtocolConfig& config);
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  StateRegister& reg() { return result_.reg; }
  PartyState& alice() { return result_.alice; }
  PartyState& bob() { return result_.bob; }
  PartyState& arbitrator() { return result_.arbitrator; }
  const Message& message() const { return result_.message; }
  const KeyPlan& plan() const { return result_.plan; }
  const ProtocolConfig& config() const { return config_; }
  std::size_t n() const { return config_.n; }
  Transcript& transcript() { return result_.transcript; }
  Strategy* strategy() const { return config_.strategy.get(); }
  AttackContext& attack_context() { return ctx_; }

  bool compare(std::span<const QubitHandle> a, std::span<const QubitHandle> b);

  /// Sends through the tap point and logs the message.
  Payload transmit(Party from, Party to, Step step, Payload payload);
  void post(Party party, std::string name, std::string value);
  void event(Step step, const std::string& text);
  /// True iff every named slot exists with the expected qubit count.
  bool well_formed(const Payload& p, std::initializer_list<std::pair<const char*, std::size_t>> slots) const;

  void record(SignatureRecord record) { result_.record = std::move(record); }
  RunResult finish(Outcome outcome, std::optional<Step> at = std::nullopt);

 private:
  ProtocolConfig config_;
  RunResult result_;
  std::mt19937_64 attacker_rng_;
  AttackContext ctx_;
};

}  // namespace aqs::detail
