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

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "aqs/core/state_register.hpp"
#include "aqs/crypto/key.hpp"
#include "aqs/crypto/qotp.hpp"
#include "aqs/protocol/compare.hpp"
#include "aqs/protocol/message.hpp"
#include "aqs/protocol/transcript.hpp"

namespace aqs {

class Strategy;

struct ProtocolConfig {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  /// Empty means a seeded random message of n qubits.
  Message message;
  CompareOptions compare;
  /// M_{K_A} in the Bell-state protocol.
  SigningMode signing_mode = SigningMode::NonCommutative;
  /// Null for an honest run.
  std::shared_ptr<Strategy> strategy;

  /// Throws Error on n == 0, a message of the wrong length, a non-positive
  /// tolerance or zero swap trials.
  void validate() const;
};

struct PartyState {
  Party name = Party::Channel;
  std::vector<Key> keys;
  std::map<std::string, HandleSeq> held;
  std::string strategy = "honest";
  /// Only the signer knows the classical description of her message.
  std::optional<Message> known_message;

  bool holds(KeyLabel label) const;
  const Key& key(KeyLabel label) const;
};

/// What Bob keeps after accepting; the arbitrator rules on it in disputes.
struct SignatureRecord {
  Protocol protocol = Protocol::Zou;
  HandleSeq message;
  std::vector<HandleSeq> signatures;
  std::optional<Key> r;
  std::size_t ka_offset = 0;
};

/// Everything an adversarial Alice can see: her own state, the public
/// board, the public run parameters and intercepted payloads. Other
/// parties' keys are deliberately unreachable from here.
struct AttackContext {
  Protocol protocol;
  std::size_t n;
  SigningMode signing_mode;
  StateRegister& reg;
  PartyState& alice;
  const PublicBoard& board;
  const KeyPlan& plan;
  std::mt19937_64& rng;
  std::vector<std::string>* notes = nullptr;

  void note(std::string text) const;
};

/// Pluggable behaviour for a dishonest Alice or a hostile channel.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;

  /// Sees every channel message before delivery and may rewrite it.
  virtual void tap(ChannelMessage& msg, AttackContext& ctx);
  /// Bell-state protocol only: replaces Alice's steps S1-S4 and returns
  /// the S5 payload (slots "S" and "P").
  virtual std::optional<Payload> alice_li_signing(AttackContext& ctx);
  /// Whether Alice posts r at V4.
  virtual bool alice_publishes_r(AttackContext& ctx);
};

struct RunResult {
  StateRegister reg;
  Transcript transcript;
  std::optional<SignatureRecord> record;
  PartyState alice;
  PartyState bob;
  PartyState arbitrator;
  Message message;
  KeyPlan plan;
};

KeyPlan key_plan(Protocol protocol, std::size_t n, SigningMode signing_mode = SigningMode::NonCommutative);

RunResult run_li_bell(const ProtocolConfig& config);
RunResult run_zou(const ProtocolConfig& config);
RunResult run_improved(const ProtocolConfig& config);
RunResult run_protocol(Protocol protocol, const ProtocolConfig& config);

enum class Ruling { SignatureValid, SignatureInvalid };
std::string_view to_string(Ruling r);

/// Arbitrator's dispute check: rebuilds |P'> from the stored message and r
/// (E_r for Zou, M_r for the improved protocol) and compares E_{K_A}|P'>
/// with every stored signature copy. The stored message is restored
/// afterwards. Throws Error("missing r") when the record has no r.
Ruling resolve_dispute(StateRegister& reg, const SignatureRecord& record, const PartyState& arbitrator,
                       const CompareOptions& options = {});

}  // namespace aqs
