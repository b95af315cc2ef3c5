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

#include "aqs/adversary/attacks.hpp"

#include <string>

#include "aqs/core/bell.hpp"

namespace aqs {
namespace {

HandleSeq take(const HandleSeq& s, std::size_t offset, std::size_t count) {
  return HandleSeq(s.begin() + static_cast<std::ptrdiff_t>(offset),
                   s.begin() + static_cast<std::ptrdiff_t>(offset + count));
}

HandleSeq join(HandleSeq a, const HandleSeq& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Makes `count` |phi+> pairs; returns the halves that leave Alice's lab.
HandleSeq split_pairs(StateRegister& reg, std::size_t count, HandleSeq& kept) {
  HandleSeq sent;
  for (std::size_t i = 0; i < count; ++i) {
    auto [t, h] = reg.make_bell_pair(BellKind::PhiPlus, Party::Alice, Party::Alice);
    sent.push_back(t);
    kept.push_back(h);
  }
  return sent;
}

/// Reads the pad off E_K(T) by Bell-measuring each ciphertext qubit with
/// its partner; bits come out in key-schedule order (z, x per qubit).
Key read_pad(StateRegister& reg, const HandleSeq& cipher, const HandleSeq& kept) {
  std::vector<bool> bits;
  for (std::size_t i = 0; i < cipher.size(); ++i) {
    const KeyPair p = infer_key_pair(BellKind::PhiPlus, reg.bell_measure(cipher[i], kept[i]));
    bits.push_back(p.z);
    bits.push_back(p.x);
  }
  return Key(std::move(bits), KeyLabel::KB);
}

/// Hands every qubit in the payload to the message recipient.
void deliver(ChannelMessage& msg) {
  for (auto& slot : msg.payload.slots) {
    for (auto& h : slot.qubits) h.owner = msg.to;
  }
}

void check_target(const AttackConfig& config, std::initializer_list<Protocol> allowed, const char* attack) {
  for (Protocol p : allowed) {
    if (config.target == p) return;
  }
  throw Error(std::string(attack) + " does not apply to protocol " + std::string(to_string(config.target)));
}

void settle(AttackReport& report, RunResult& run) {
  report.transcript = run.transcript;
  if (run.transcript.outcome == Outcome::Accepted) {
    if (run.record && run.record->r) {
      report.dispute_ruling = resolve_dispute(run.reg, *run.record, run.arbitrator, {});
      report.disavowal_upheld = report.dispute_ruling == Ruling::SignatureInvalid;
    }
  } else {
    report.detected_at_step = run.transcript.ended_at;
  }
}

void score_key(AttackReport& report, const std::optional<Key>& recovered, const RunResult& run) {
  if (!recovered) return;
  report.recovered_key_bits = *recovered;
  const Key truth = run.bob.key(KeyLabel::KB).segment(run.plan.at("Y_B").offset, report.target_key_bits);
  report.key_recovery_exact = recovered->size() == truth.size() && recovered->bits() == truth.bits();
}

}  // namespace

void KeyExtractionStrategy::tap(ChannelMessage& msg, AttackContext& ctx) {
  const std::size_t n = ctx.n;
  if (msg.from == Party::Alice && msg.step == Step::S2 && msg.payload.has_slot("P'")) {
    genuine_ = msg.payload.slot("P'");
    msg.payload.set_slot("P'", split_pairs(ctx.reg, n, kept_halves_));
    deliver(msg);
    ctx.note("Alice sends T halves of " + std::to_string(n) + " phi+ pairs in place of P'");
    return;
  }
  if (msg.from == Party::Bob && msg.to == Party::Arbitrator && msg.step == Step::V1 && !kept_halves_.empty()) {
    const HandleSeq y = msg.payload.slot("Y_B");
    recovered_ = read_pad(ctx.reg, take(y, 0, n), kept_halves_);
    kept_halves_.clear();
    ctx.note("Alice intercepts Y_B and recovers K_B bits " + recovered_->to_bit_string());
    qotp_encrypt(ctx.reg, *recovered_, genuine_, 0);
    msg.payload.set_slot("Y_B", join(genuine_, take(y, n, n)));
    deliver(msg);
    ctx.note("Alice forwards E_KB(P') with the genuine P'");
    return;
  }
  if (msg.from == Party::Arbitrator && msg.to == Party::Bob && msg.step == Step::V2 && recovered_) {
    const HandleSeq y = msg.payload.slot("Y_B");
    const Message other = random_message(n, ctx.rng);
    HandleSeq forged = prepare_message(ctx.reg, other, Party::Alice);
    qotp_encrypt(ctx.reg, ctx.alice.key(KeyLabel::KA), forged, ctx.plan.at("S_A").offset);
    qotp_encrypt(ctx.reg, *recovered_, forged, 0);
    ctx.reg.discard(take(y, n, n));
    msg.payload.set_slot("Y_B", join(take(y, 0, n), forged));
    deliver(msg);
    substituted_ = true;
    ctx.note("Alice replaces the returned S_A with E_KA(P'') for a fresh P''");
  }
}

std::optional<Payload> TotalBreakStrategy::alice_li_signing(AttackContext& ctx) {
  const std::size_t n = ctx.n;
  const HandleSeq t = split_pairs(ctx.reg, 4 * n, kept_halves_);
  return Payload{{{"S", take(t, 0, 3 * n)}, {"P", take(t, 3 * n, n)}}, {}};
}

void TotalBreakStrategy::tap(ChannelMessage& msg, AttackContext& ctx) {
  const std::size_t n = ctx.n;
  if (ctx.protocol == Protocol::Improved) {
    if (msg.from != Party::Alice || msg.step != Step::S2) return;
    for (const char* slot : {"P'", "S_A1", "S_A2"}) {
      if (!msg.payload.has_slot(slot)) continue;
      ctx.reg.discard(msg.payload.slot(slot));
      msg.payload.set_slot(slot, split_pairs(ctx.reg, n, kept_halves_));
    }
    deliver(msg);
    ctx.note("Alice sends T halves in place of P', S_A1 and S_A2");
    return;
  }
  if (ctx.protocol != Protocol::LiBell || msg.step != Step::V1 || kept_halves_.empty()) return;

  const HandleSeq y = msg.payload.slot("Y_B");
  recovered_ = read_pad(ctx.reg, y, kept_halves_);
  kept_halves_.clear();
  ctx.note("Alice intercepts Y_B and recovers " + std::to_string(recovered_->size()) + " K_B bits");

  forged_ = forged_kind_ == ForgedMessage::OrthogonalToOriginal ? orthogonal_message(*ctx.alice.known_message)
                                                                  : random_message(n, ctx.rng);
  const Key& ka = ctx.alice.key(KeyLabel::KA);
  const HandleSeq f1 = prepare_message(ctx.reg, *forged_, Party::Alice);
  const HandleSeq f2 = prepare_message(ctx.reg, *forged_, Party::Alice);
  const HandleSeq f3 = prepare_message(ctx.reg, *forged_, Party::Alice);
  signing_transform(ctx.reg, ka, f1, ctx.signing_mode, ctx.plan.at("M_KA").offset);

  const HandleSeq shared = ctx.alice.held.at("shared");
  HandleSeq m_a;
  for (std::size_t i = 0; i < n; ++i) {
    auto [a, b] = ctx.reg.make_bell_pair(ctx.reg.bell_measure(f2[i], shared[i]), Party::Alice, Party::Alice);
    m_a.push_back(a);
    m_a.push_back(b);
  }
  ctx.alice.held.erase("shared");

  HandleSeq signature = join(m_a, f1);
  qotp_encrypt(ctx.reg, ka, signature, ctx.plan.at("S").offset);
  HandleSeq forged_y = join(signature, f3);
  qotp_encrypt(ctx.reg, *recovered_, forged_y, 0);
  msg.payload.set_slot("Y_B", std::move(forged_y));
  deliver(msg);
  ctx.note("Alice injects E_KB(S', P') for a message of her choice");
}

void GaoDisturbanceStrategy::tap(ChannelMessage& msg, AttackContext& ctx) {
  if (msg.from != Party::Arbitrator || msg.to != Party::Bob || msg.step != Step::V2) return;
  const HandleSeq& y = msg.payload.slot("Y_B");
  std::string words;
  for (std::size_t i = ctx.n; i < 2 * ctx.n; ++i) {
    PauliWord w;
    if (fixed_) {
      w = *fixed_;
    } else {
      const int pick = static_cast<int>(uniform01(ctx.rng) * 3.0);
      w = PauliWord{pick != 1, pick != 0, 0};  // X, Z or XZ
    }
    ctx.reg.apply_pauli(y[i], w);
    applied_.push_back(w);
    words += (words.empty() ? "" : " ") + to_string(w);
  }
  ctx.note("Alice disturbs the returned S_A with " + words);
}

AttackReport key_extraction_attack(const AttackConfig& config) {
  check_target(config, {Protocol::Zou, Protocol::Improved}, "key extraction");
  ProtocolConfig pc = config.protocol;
  std::shared_ptr<KeyExtractionStrategy> strategy;
  if (config.enabled) pc.strategy = strategy = std::make_shared<KeyExtractionStrategy>();
  RunResult run = run_protocol(config.target, pc);

  AttackReport report;
  report.attack_name = "key-extraction";
  report.target = config.target;
  report.enabled = config.enabled;
  report.target_key_bits = 2 * pc.n;
  if (strategy) score_key(report, strategy->recovered(), run);
  settle(report, run);
  report.forgery_accepted =
      strategy && strategy->substituted_signature() && run.transcript.outcome == Outcome::Accepted;
  return report;
}

AttackReport total_break_attack(const AttackConfig& config) {
  check_target(config, {Protocol::LiBell, Protocol::Improved}, "total break");
  ProtocolConfig pc = config.protocol;
  std::shared_ptr<TotalBreakStrategy> strategy;
  if (config.enabled) pc.strategy = strategy = std::make_shared<TotalBreakStrategy>(config.forged);
  RunResult run = run_protocol(config.target, pc);

  AttackReport report;
  report.attack_name = "total-break";
  report.target = config.target;
  report.enabled = config.enabled;
  report.target_key_bits = 8 * pc.n;
  if (strategy) score_key(report, strategy->recovered(), run);
  settle(report, run);
  if (strategy && strategy->forged_message() && run.record) {
    const double f = run.reg.fidelity(run.record->message, message_vector(*strategy->forged_message()));
    report.forgery_accepted = run.transcript.outcome == Outcome::Accepted && f >= 1.0 - 1e-9;
  }
  return report;
}

AttackReport gao_disturbance_attack(const AttackConfig& config) {
  check_target(config, {Protocol::Zou, Protocol::Improved}, "gao disturbance");
  ProtocolConfig pc = config.protocol;
  if (config.enabled) pc.strategy = std::make_shared<GaoDisturbanceStrategy>(config.disturbance);
  RunResult run = run_protocol(config.target, pc);

  AttackReport report;
  report.attack_name = "gao-disturbance";
  report.target = config.target;
  report.enabled = config.enabled;
  settle(report, run);
  return report;
}

}  // namespace aqs
