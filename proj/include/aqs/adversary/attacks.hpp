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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aqs/protocol/engine.hpp"

namespace aqs {

enum class ForgedMessage { Random, OrthogonalToOriginal };

struct AttackConfig {
  Protocol target = Protocol::Zou;
  /// n, seed, comparison policy and (optionally) the honest message.
  ProtocolConfig protocol;
  /// false runs the target honestly as a control.
  bool enabled = true;
  /// Total break: which message Alice substitutes after learning K_B.
  ForgedMessage forged = ForgedMessage::Random;
  /// Gao disturbance: fixed per-qubit word; unset draws a uniformly random
  /// non-identity Pauli per qubit.
  std::optional<PauliWord> disturbance;
};

struct AttackReport {
  std::string attack_name;
  Protocol target = Protocol::Zou;
  bool enabled = true;
  Key recovered_key_bits;
  std::size_t target_key_bits = 0;
  bool key_recovery_exact = false;
  bool forgery_accepted = false;
  bool disavowal_upheld = false;
  std::optional<Step> detected_at_step;
  std::optional<Ruling> dispute_ruling;
  Transcript transcript;
};

/// Alice hands Bob the T halves of n fresh |phi+> pairs instead of |P'>,
/// reads K_B off Bob's V1 ciphertext by Bell-measuring against her H
/// halves, forwards a correctly re-encrypted |P'> so the arbitrator is
/// satisfied, then swaps the returned |S_A> for E_{K_A}|P''>.
class KeyExtractionStrategy : public Strategy {
 public:
  std::string name() const override { return "key-extraction"; }
  void tap(ChannelMessage& msg, AttackContext& ctx) override;

  const std::optional<Key>& recovered() const { return recovered_; }
  bool substituted_signature() const { return substituted_; }

 private:
  HandleSeq kept_halves_;
  HandleSeq genuine_;
  std::optional<Key> recovered_;
  bool substituted_ = false;
};

/// Against the Bell-state protocol: Alice sends T halves of 4n |phi+> pairs
/// as (|S>, |P>), recovers all 8n K_B bits used at V1, and injects a forged
/// message with a valid signature toward the arbitrator. Against the
/// improved protocol the same substitution is attempted on every |P'> and
/// |S_A> slot Alice sends.
class TotalBreakStrategy : public Strategy {
 public:
  explicit TotalBreakStrategy(ForgedMessage forged) : forged_kind_(forged) {}
  std::string name() const override { return "total-break"; }
  void tap(ChannelMessage& msg, AttackContext& ctx) override;
  std::optional<Payload> alice_li_signing(AttackContext& ctx) override;

  const std::optional<Key>& recovered() const { return recovered_; }
  const std::optional<Message>& forged_message() const { return forged_; }

 private:
  ForgedMessage forged_kind_;
  HandleSeq kept_halves_;
  std::optional<Key> recovered_;
  std::optional<Message> forged_;
};

/// Alice disturbs the |S_A> part of the arbitrator's returned Y_B with a
/// Pauli word per qubit.
class GaoDisturbanceStrategy : public Strategy {
 public:
  explicit GaoDisturbanceStrategy(std::optional<PauliWord> fixed = std::nullopt) : fixed_(fixed) {}
  std::string name() const override { return "gao-disturbance"; }
  void tap(ChannelMessage& msg, AttackContext& ctx) override;

  const std::vector<PauliWord>& applied() const { return applied_; }

 private:
  std::optional<PauliWord> fixed_;
  std::vector<PauliWord> applied_;
};

/// Targets: Zou or Improved.
AttackReport key_extraction_attack(const AttackConfig& config);
/// Targets: LiBell or Improved.
AttackReport total_break_attack(const AttackConfig& config);
/// Targets: Zou or Improved.
AttackReport gao_disturbance_attack(const AttackConfig& config);

/// Attack header block followed by the transcript body.
std::string serialize(const AttackReport& report);

}  // namespace aqs
