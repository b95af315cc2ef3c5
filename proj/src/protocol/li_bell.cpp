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

// Bell-state arbitrated signature: Alice signs with M_{K_A}, teleports a
// second copy of |P> to Bob over shared |phi+> pairs, and the arbitrator
// checks |R_A> = M_{K_A}|P> on Bob's behalf.

#include "aqs/core/bell.hpp"
#include "session.hpp"

namespace aqs {

using detail::concat;
using detail::slice;

RunResult run_li_bell(const ProtocolConfig& config) {
  detail::Session s(Protocol::LiBell, config);
  StateRegister& reg = s.reg();
  const std::size_t n = s.n();
  const SigningMode mode = config.signing_mode;
  const KeyUse& sign_use = s.plan().at("M_KA");
  const KeyUse& sig_use = s.plan().at("S");
  const KeyUse& yb_use = s.plan().at("Y_B");
  const KeyUse& ytb_use = s.plan().at("Y_TB");

  HandleSeq alice_halves, bob_halves;
  for (std::size_t i = 0; i < n; ++i) {
    auto [a, b] = reg.make_bell_pair(BellKind::PhiPlus, Party::Alice, Party::Bob);
    alice_halves.push_back(a);
    bob_halves.push_back(b);
  }
  s.alice().held["shared"] = alice_halves;
  s.bob().held["shared"] = bob_halves;

  std::optional<Payload> signed_payload;
  if (Strategy* st = s.strategy()) signed_payload = st->alice_li_signing(s.attack_context());
  if (!signed_payload) {
    const Key& ka = s.alice().key(KeyLabel::KA);
    const HandleSeq copy1 = prepare_message(reg, s.message(), Party::Alice);
    const HandleSeq copy2 = prepare_message(reg, s.message(), Party::Alice);
    const HandleSeq copy3 = prepare_message(reg, s.message(), Party::Alice);

    signing_transform(reg, ka, copy1, mode, sign_use.offset);  // |R_A>

    std::vector<BellKind> outcomes;
    for (std::size_t i = 0; i < n; ++i) outcomes.push_back(reg.bell_measure(copy2[i], alice_halves[i]));
    s.alice().held.erase("shared");
    s.event(Step::S3, "Alice M_A = " + detail::describe(outcomes));

    HandleSeq signature = concat(detail::encode_bell_outcomes(reg, outcomes, Party::Alice), copy1);
    qotp_encrypt(reg, ka, signature, sig_use.offset);
    signed_payload = Payload{{{"S", signature}, {"P", copy3}}, {}};
  }

  const Payload at_bob = s.transmit(Party::Alice, Party::Bob, Step::S5, std::move(*signed_payload));
  if (!s.well_formed(at_bob, {{"S", 3 * n}, {"P", n}})) {
    s.event(Step::S5, "Bob received a malformed signature message");
    return s.finish(Outcome::Aborted, Step::S5);
  }

  // V1
  HandleSeq y_b = concat(at_bob.slot("S"), at_bob.slot("P"));
  qotp_encrypt(reg, s.bob().key(KeyLabel::KB), y_b, yb_use.offset);
  const Payload at_arbitrator = s.transmit(Party::Bob, Party::Arbitrator, Step::V1, Payload{{{"Y_B", y_b}}, {}});
  if (!s.well_formed(at_arbitrator, {{"Y_B", 4 * n}})) {
    s.event(Step::V1, "arbitrator received a malformed Y_B");
    return s.finish(Outcome::Aborted, Step::V1);
  }

  // V2
  const Key& arb_ka = s.arbitrator().key(KeyLabel::KA);
  const Key& arb_kb = s.arbitrator().key(KeyLabel::KB);
  const HandleSeq& y = at_arbitrator.slot("Y_B");
  qotp_decrypt(reg, arb_kb, y, yb_use.offset);
  const HandleSeq signature = slice(y, 0, 3 * n);
  const HandleSeq message = slice(y, 3 * n, n);
  qotp_decrypt(reg, arb_ka, signature, sig_use.offset);
  const HandleSeq m_a = slice(signature, 0, 2 * n);
  const HandleSeq r_a = slice(signature, 2 * n, n);

  signing_transform(reg, arb_ka, message, mode, sign_use.offset);
  const bool v = s.compare(r_a, message);
  signing_transform_inverse(reg, arb_ka, message, mode, sign_use.offset);
  s.transcript().verdicts.v = v;

  // V3: the M_A pairs are orthogonal Bell states, so the arbitrator reads
  // them out and prepares as many copies as needed.
  std::vector<BellKind> distinguished;
  for (std::size_t i = 0; i < n; ++i) distinguished.push_back(reg.bell_measure(m_a[2 * i], m_a[2 * i + 1]));
  s.event(Step::V3, "arbitrator M_A = " + detail::describe(distinguished));
  HandleSeq restored = concat(detail::encode_bell_outcomes(reg, distinguished, Party::Arbitrator), r_a);
  qotp_encrypt(reg, arb_ka, restored, sig_use.offset);
  const HandleSeq m_a_copy = detail::encode_bell_outcomes(reg, distinguished, Party::Arbitrator);
  const QubitHandle v_qubit = reg.alloc_qubit(v ? 0.0 : 1.0, v ? 1.0 : 0.0, Party::Arbitrator);

  HandleSeq y_tb = concat(concat(m_a_copy, restored), message);
  y_tb.push_back(v_qubit);
  qotp_encrypt(reg, arb_kb, y_tb, ytb_use.offset);
  const Payload back = s.transmit(Party::Arbitrator, Party::Bob, Step::V3, Payload{{{"Y_TB", y_tb}}, {}});
  if (!s.well_formed(back, {{"Y_TB", 6 * n + 1}})) {
    s.event(Step::V3, "Bob received a malformed Y_TB");
    return s.finish(Outcome::Aborted, Step::V3);
  }

  // V4
  const HandleSeq& z = back.slot("Y_TB");
  qotp_decrypt(reg, s.bob().key(KeyLabel::KB), z, ytb_use.offset);
  if (reg.measure_z(z.back()) != 1) {
    s.event(Step::V4, "Bob reads V = 0");
    return s.finish(Outcome::Rejected, Step::V4);
  }

  // V5
  std::vector<BellKind> corrections;
  for (std::size_t i = 0; i < n; ++i) corrections.push_back(reg.bell_measure(z[2 * i], z[2 * i + 1]));
  for (std::size_t i = 0; i < n; ++i) reg.apply_pauli(bob_halves[i], teleport_correction(corrections[i]));
  const HandleSeq bob_signature = slice(z, 2 * n, 3 * n);
  const HandleSeq bob_message = slice(z, 5 * n, n);
  if (!s.compare(bob_halves, bob_message)) {
    s.event(Step::V5, "teleported copy differs from the returned message");
    return s.finish(Outcome::Rejected, Step::V5);
  }

  s.transcript().recovered_fidelity = reg.fidelity(bob_halves, message_vector(s.message()));
  s.bob().held["message"] = bob_halves;
  s.bob().held["signature"] = bob_signature;
  s.record(SignatureRecord{Protocol::LiBell, bob_halves, {bob_signature}, std::nullopt, sig_use.offset});
  return s.finish(Outcome::Accepted);
}

}  // namespace aqs
