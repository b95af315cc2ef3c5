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

#include "aqs/protocol/engine.hpp"

#include <algorithm>
#include <sstream>

#include "session.hpp"

namespace aqs {

void ProtocolConfig::validate() const {
  if (n == 0) throw Error("n must be at least 1");
  if (!message.empty() && message.size() != n) throw Error("message length does not match n");
  if (!(compare.tolerance > 0.0 && compare.tolerance < 1.0)) throw Error("comparison tolerance must be in (0, 1)");
  if (compare.mode == CompareMode::SwapTest && compare.swap_trials == 0) throw Error("swap_trials must be at least 1");
  for (const auto& q : message) {
    if (std::norm(q.alpha) + std::norm(q.beta) == 0.0) throw Error("degenerate amplitude pair");
  }
}

bool PartyState::holds(KeyLabel label) const {
  return std::any_of(keys.begin(), keys.end(), [&](const Key& k) { return k.label() == label; });
}

const Key& PartyState::key(KeyLabel label) const {
  for (const auto& k : keys) {
    if (k.label() == label) return k;
  }
  throw Error(std::string(to_string(name)) + " does not hold " + std::string(to_string(label)));
}

void AttackContext::note(std::string text) const {
  if (notes) notes->push_back(std::move(text));
}

void Strategy::tap(ChannelMessage&, AttackContext&) {}
std::optional<Payload> Strategy::alice_li_signing(AttackContext&) { return std::nullopt; }
bool Strategy::alice_publishes_r(AttackContext&) { return true; }

KeyPlan key_plan(Protocol protocol, std::size_t n, SigningMode signing_mode) {
  KeyPlan plan;
  switch (protocol) {
    case Protocol::LiBell:
      plan.add(KeyLabel::KA, signing_bits_per_qubit(signing_mode) * n, Step::S2, "M_KA");
      plan.add(KeyLabel::KA, 2 * 3 * n, Step::S4, "S");
      plan.add(KeyLabel::KB, 2 * 4 * n, Step::V1, "Y_B");
      plan.add(KeyLabel::KB, 2 * (6 * n + 1), Step::V3, "Y_TB");
      break;
    case Protocol::Zou:
    case Protocol::Improved:
      plan.add(KeyLabel::R, protocol == Protocol::Zou ? 2 * n : signing_bits_per_qubit(SigningMode::NonCommutative) * n,
               Step::S1, "P'");
      plan.add(KeyLabel::KAB, 2 * n, Step::S2, "R_AB");
      plan.add(KeyLabel::KA, 2 * n, Step::S2, "S_A");
      plan.add(KeyLabel::KB, 2 * 2 * n, Step::V1, "Y_B");
      plan.add(KeyLabel::KB, 2 * 2 * n, Step::V2, "Y_B-return");
      break;
  }
  return plan;
}

RunResult run_protocol(Protocol protocol, const ProtocolConfig& config) {
  switch (protocol) {
    case Protocol::LiBell: return run_li_bell(config);
    case Protocol::Zou: return run_zou(config);
    case Protocol::Improved: return run_improved(config);
  }
  throw Error("unknown protocol");
}

std::string_view to_string(Ruling r) { return r == Ruling::SignatureValid ? "signature_valid" : "signature_invalid"; }

namespace detail {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 over (seed, stream)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

HandleSeq concat(std::span<const QubitHandle> a, std::span<const QubitHandle> b) {
  HandleSeq out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

HandleSeq slice(std::span<const QubitHandle> s, std::size_t offset, std::size_t count) {
  const auto sub = s.subspan(offset, count);
  return HandleSeq(sub.begin(), sub.end());
}

HandleSeq encode_bell_outcomes(StateRegister& reg, std::span<const BellKind> outcomes, Party owner) {
  HandleSeq out;
  for (BellKind k : outcomes) {
    auto [a, b] = reg.make_bell_pair(k, owner, owner);
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

std::string describe(std::span<const BellKind> outcomes) {
  std::string out;
  for (BellKind k : outcomes) {
    if (!out.empty()) out += ' ';
    out += to_string(k);
  }
  return out;
}

Session::Session(Protocol protocol, const ProtocolConfig& config)
    : config_((config.validate(), config)),
      result_{StateRegister(derive_seed(config.seed, 0)), {}, std::nullopt, {}, {}, {}, {},
              key_plan(protocol, config.n, config.signing_mode)},
      attacker_rng_(derive_seed(config.seed, 3)),
      ctx_{protocol, config.n, config.signing_mode, result_.reg, result_.alice, result_.transcript.board,
           result_.plan, attacker_rng_, nullptr} {
  Transcript& t = result_.transcript;
  t.protocol = protocol;
  t.seed = config.seed;
  t.key_uses = result_.plan.uses();
  t.config = {{"n", std::to_string(config.n)},
              {"compare_mode", std::string(to_string(config.compare.mode))},
              {"tolerance", format_real(config.compare.tolerance)},
              {"swap_trials", std::to_string(config.compare.swap_trials)},
              {"message", config.message.empty() ? "random" : "explicit"},
              {"strategy", config.strategy ? config.strategy->name() : "honest"}};
  if (protocol == Protocol::LiBell) t.config.emplace_back("signing_mode", std::string(to_string(config.signing_mode)));

  if (config.message.empty()) {
    std::mt19937_64 message_rng(derive_seed(config.seed, 2));
    result_.message = random_message(config.n, message_rng);
  } else {
    result_.message = config.message;
  }

  std::mt19937_64 key_rng(derive_seed(config.seed, 1));
  std::vector<Key> keys;
  for (KeyLabel label : {KeyLabel::KA, KeyLabel::KB, KeyLabel::KAB, KeyLabel::R}) {
    const std::size_t bits = result_.plan.total(label);
    if (bits > 0) keys.push_back(Key::random(bits, label, key_rng));
  }
  auto give = [&](PartyState& party, std::initializer_list<KeyLabel> labels) {
    for (const auto& k : keys) {
      if (std::find(labels.begin(), labels.end(), k.label()) != labels.end()) party.keys.push_back(k);
    }
  };
  result_.alice.name = Party::Alice;
  result_.bob.name = Party::Bob;
  result_.arbitrator.name = Party::Arbitrator;
  give(result_.alice, {KeyLabel::KA, KeyLabel::KAB, KeyLabel::R});
  give(result_.bob, {KeyLabel::KB, KeyLabel::KAB});
  give(result_.arbitrator, {KeyLabel::KA, KeyLabel::KB});
  result_.alice.known_message = result_.message;
  if (config.strategy) result_.alice.strategy = config.strategy->name();
}

bool Session::compare(std::span<const QubitHandle> a, std::span<const QubitHandle> b) {
  return state_compare(reg(), a, b, config_.compare);
}

Payload Session::transmit(Party from, Party to, Step step, Payload payload) {
  for (auto& slot : payload.slots) {
    for (auto& h : slot.qubits) h.owner = to;
  }
  ChannelMessage msg{from, to, step, std::move(payload), {}, {}, {}};
  msg.sent_state = snapshot_payload(reg(), msg.payload);
  if (Strategy* s = strategy()) {
    ctx_.notes = &msg.tap_notes;
    s->tap(msg, ctx_);
    ctx_.notes = nullptr;
    std::string after = snapshot_payload(reg(), msg.payload);
    if (after != msg.sent_state) msg.delivered_state = std::move(after);
  }
  Payload delivered = msg.payload;
  result_.transcript.messages.push_back(std::move(msg));
  return delivered;
}

void Session::post(Party party, std::string name, std::string value) {
  result_.transcript.board.post(party, std::move(name), std::move(value));
}

void Session::event(Step step, const std::string& text) {
  result_.transcript.events.push_back(std::string(to_string(step)) + " " + text);
}

bool Session::well_formed(const Payload& p,
                          std::initializer_list<std::pair<const char*, std::size_t>> slots) const {
  for (const auto& [name, size] : slots) {
    if (!p.has_slot(name) || p.slot(name).size() != size) return false;
  }
  return true;
}

RunResult Session::finish(Outcome outcome, std::optional<Step> at) {
  Transcript& t = result_.transcript;
  t.outcome = outcome;
  t.ended_at = at;
  if (outcome == Outcome::Accepted && !t.verdicts.all_defined_pass()) {
    throw Error("internal: accepted run with a failing verdict");
  }
  if (outcome != Outcome::Accepted) result_.record.reset();
  return std::move(result_);
}

}  // namespace detail
}  // namespace aqs
