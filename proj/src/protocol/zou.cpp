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

// Entanglement-free arbitrated signature with a public board and a random
// pad r that hides |P> until Bob has finished verifying.

#include "session.hpp"

namespace aqs {

using detail::concat;
using detail::slice;

RunResult run_zou(const ProtocolConfig& config) {
  detail::Session s(Protocol::Zou, config);
  StateRegister& reg = s.reg();
  const std::size_t n = s.n();
  const KeyUse& r_use = s.plan().at("P'");
  const KeyUse& rab_use = s.plan().at("R_AB");
  const KeyUse& sa_use = s.plan().at("S_A");
  const KeyUse& yb_use = s.plan().at("Y_B");
  const KeyUse& ret_use = s.plan().at("Y_B-return");

  // S1
  const Key& r = s.alice().key(KeyLabel::R);
  HandleSeq copies[3];
  for (auto& c : copies) {
    c = prepare_message(reg, s.message(), Party::Alice);
    qotp_encrypt(reg, r, c, r_use.offset);
  }

  // S2
  qotp_encrypt(reg, s.alice().key(KeyLabel::KAB), copies[1], rab_use.offset);
  qotp_encrypt(reg, s.alice().key(KeyLabel::KA), copies[2], sa_use.offset);
  const Payload at_bob = s.transmit(Party::Alice, Party::Bob, Step::S2,
                                    Payload{{{"P'", copies[0]}, {"R_AB", copies[1]}, {"S_A", copies[2]}}, {}});
  if (!s.well_formed(at_bob, {{"P'", n}, {"R_AB", n}, {"S_A", n}})) {
    s.event(Step::S2, "Bob received a malformed signature message");
    return s.finish(Outcome::Aborted, Step::S2);
  }
  const HandleSeq r_ab = at_bob.slot("R_AB");
  s.bob().held["R_AB"] = r_ab;

  // V1
  const Key& kb = s.bob().key(KeyLabel::KB);
  HandleSeq y_b = concat(at_bob.slot("P'"), at_bob.slot("S_A"));
  qotp_encrypt(reg, kb, y_b, yb_use.offset);
  const Payload at_arbitrator = s.transmit(Party::Bob, Party::Arbitrator, Step::V1, Payload{{{"Y_B", y_b}}, {}});
  if (!s.well_formed(at_arbitrator, {{"Y_B", 2 * n}})) {
    s.event(Step::V1, "arbitrator received a malformed Y_B");
    return s.finish(Outcome::Aborted, Step::V1);
  }

  // V2
  const Key& arb_ka = s.arbitrator().key(KeyLabel::KA);
  const Key& arb_kb = s.arbitrator().key(KeyLabel::KB);
  const HandleSeq& y = at_arbitrator.slot("Y_B");
  qotp_decrypt(reg, arb_kb, y, yb_use.offset);
  const HandleSeq p_prime = slice(y, 0, n);
  const HandleSeq s_a = slice(y, n, n);
  qotp_encrypt(reg, arb_ka, p_prime, sa_use.offset);
  const bool v_t = s.compare(p_prime, s_a);
  qotp_decrypt(reg, arb_ka, p_prime, sa_use.offset);
  s.transcript().verdicts.v_t = v_t;
  s.post(Party::Arbitrator, "V_T", v_t ? "1" : "0");
  if (!v_t) {
    s.post(Party::Arbitrator, "abort", "1");
    return s.finish(Outcome::Aborted, Step::V2);
  }
  // Regenerated under fresh K_B bits.
  qotp_encrypt(reg, arb_kb, y, ret_use.offset);
  const Payload back = s.transmit(Party::Arbitrator, Party::Bob, Step::V2, Payload{{{"Y_B", y}}, {}});
  if (!s.well_formed(back, {{"Y_B", 2 * n}})) {
    s.event(Step::V2, "Bob received a malformed Y_B");
    return s.finish(Outcome::Aborted, Step::V2);
  }

  // V3
  if (s.transcript().board.latest("V_T") != "1") return s.finish(Outcome::Rejected, Step::V3);
  const HandleSeq& z = back.slot("Y_B");
  qotp_decrypt(reg, kb, z, ret_use.offset);
  const HandleSeq bob_p_prime = slice(z, 0, n);
  const HandleSeq bob_s_a = slice(z, n, n);
  const Key& bob_kab = s.bob().key(KeyLabel::KAB);
  qotp_encrypt(reg, bob_kab, bob_p_prime, rab_use.offset);
  const bool v_b = s.compare(bob_p_prime, r_ab);
  qotp_decrypt(reg, bob_kab, bob_p_prime, rab_use.offset);
  s.transcript().verdicts.v_b = v_b;
  s.post(Party::Bob, "V_B", v_b ? "1" : "0");
  if (!v_b) return s.finish(Outcome::Rejected, Step::V3);

  // V4
  if (Strategy* st = s.strategy(); st && !st->alice_publishes_r(s.attack_context())) {
    s.event(Step::V4, "Alice withholds r");
    return s.finish(Outcome::Aborted, Step::V4);
  }
  s.post(Party::Alice, "r", r.to_hex());
  const Key bob_r = Key::from_hex(*s.transcript().board.latest("r"), r.size(), KeyLabel::R);
  qotp_decrypt(reg, bob_r, bob_p_prime, r_use.offset);

  s.transcript().recovered_fidelity = reg.fidelity(bob_p_prime, message_vector(s.message()));
  s.bob().held["message"] = bob_p_prime;
  s.bob().held["signature"] = bob_s_a;
  s.record(SignatureRecord{Protocol::Zou, bob_p_prime, {bob_s_a}, bob_r, sa_use.offset});
  return s.finish(Outcome::Accepted);
}

}  // namespace aqs
