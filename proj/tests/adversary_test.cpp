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

#include "aqs/adversary/attacks.hpp"

namespace aqs {
namespace {

AttackConfig attack(Protocol target, std::size_t n, std::uint64_t seed) {
  AttackConfig c;
  c.target = target;
  c.protocol.n = n;
  c.protocol.seed = seed;
  return c;
}

/// Records what the channel carried so tests can confirm the attacker only
/// worked from intercepted payloads.
bool transcript_has_note(const Transcript& t, std::string_view needle) {
  for (const auto& m : t.messages) {
    for (const auto& note : m.tap_notes) {
      if (note.find(needle) != std::string::npos) return true;
    }
  }
  return false;
}

TEST(KeyExtraction, RecoversKeySegmentAgainstZou) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AttackReport r = key_extraction_attack(attack(Protocol::Zou, 4, seed));
    ASSERT_TRUE(r.key_recovery_exact) << seed;
    EXPECT_EQ(r.recovered_key_bits.size(), 8u);
    EXPECT_EQ(r.target_key_bits, 8u);
    EXPECT_EQ(r.transcript.outcome, Outcome::Accepted);
    EXPECT_EQ(r.dispute_ruling, Ruling::SignatureInvalid);
    EXPECT_TRUE(r.disavowal_upheld);
    EXPECT_FALSE(r.detected_at_step);
    EXPECT_EQ(r.transcript.verdicts.v_t, true);
  }
}

TEST(KeyExtraction, SinglePairReadsSigmaX) {
  // A phi+ pair whose T half came back as psi+ carries the pad word X:
  // schedule bits (z, x) = (0, 1).
  EXPECT_EQ(infer_key_pair(BellKind::PhiPlus, BellKind::PsiPlus), (KeyPair{false, true}));
}

TEST(KeyExtraction, ChannelTranscriptShowsSubstitution) {
  const AttackReport r = key_extraction_attack(attack(Protocol::Zou, 2, 3));
  ASSERT_EQ(r.transcript.messages.size(), 3u);
  for (const auto& m : r.transcript.messages) EXPECT_FALSE(m.delivered_state.empty()) << to_string(m.step);
  EXPECT_TRUE(transcript_has_note(r.transcript, "recovers K_B bits " + r.recovered_key_bits.to_bit_string()));
}

TEST(KeyExtraction, DetectedByImprovedAtV1) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AttackReport r = key_extraction_attack(attack(Protocol::Improved, 4, seed));
    EXPECT_EQ(r.detected_at_step, Step::V1) << seed;
    EXPECT_FALSE(r.forgery_accepted);
    EXPECT_FALSE(r.key_recovery_exact);
    EXPECT_EQ(r.recovered_key_bits.size(), 0u);
  }
}

TEST(KeyExtraction, RejectsLiTarget) { EXPECT_THROW(key_extraction_attack(attack(Protocol::LiBell, 2, 1)), Error); }

TEST(KeyExtraction, DisabledIsHonestControl) {
  AttackConfig c = attack(Protocol::Zou, 4, 8);
  c.enabled = false;
  const AttackReport r = key_extraction_attack(c);
  EXPECT_EQ(r.transcript.outcome, Outcome::Accepted);
  EXPECT_EQ(r.dispute_ruling, Ruling::SignatureValid);
  EXPECT_FALSE(r.disavowal_upheld);
  EXPECT_FALSE(r.key_recovery_exact);
}

TEST(TotalBreak, RecoversAllKeyBitsAndForgesAgainstLi) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AttackReport r = total_break_attack(attack(Protocol::LiBell, 2, seed));
    ASSERT_TRUE(r.key_recovery_exact) << seed;
    EXPECT_EQ(r.recovered_key_bits.size(), 16u);
    EXPECT_TRUE(r.forgery_accepted);
    EXPECT_EQ(r.transcript.outcome, Outcome::Accepted);
    EXPECT_EQ(r.transcript.verdicts.v, true);
  }
}

TEST(TotalBreak, OrthogonalForgeryStillAccepted) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    AttackConfig c = attack(Protocol::LiBell, 2, seed);
    c.forged = ForgedMessage::OrthogonalToOriginal;
    const AttackReport r = total_break_attack(c);
    EXPECT_TRUE(r.forgery_accepted);
    ASSERT_TRUE(r.transcript.recovered_fidelity);
    // Bob ends up with a state orthogonal to what Alice first signed.
    EXPECT_LT(*r.transcript.recovered_fidelity, 1e-9);
  }
}

TEST(TotalBreak, BothSigningModes) {
  for (SigningMode mode : {SigningMode::Pauli, SigningMode::NonCommutative}) {
    AttackConfig c = attack(Protocol::LiBell, 3, 5);
    c.protocol.signing_mode = mode;
    const AttackReport r = total_break_attack(c);
    EXPECT_TRUE(r.key_recovery_exact);
    EXPECT_TRUE(r.forgery_accepted);
  }
}

TEST(TotalBreak, DisabledIsHonestControl) {
  AttackConfig c = attack(Protocol::LiBell, 2, 8);
  c.enabled = false;
  const AttackReport r = total_break_attack(c);
  EXPECT_EQ(r.transcript.outcome, Outcome::Accepted);
  EXPECT_EQ(r.recovered_key_bits.size(), 0u);
  EXPECT_FALSE(r.key_recovery_exact);
  EXPECT_FALSE(r.forgery_accepted);
}

TEST(TotalBreak, DetectedByImprovedAtV1) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AttackReport r = total_break_attack(attack(Protocol::Improved, 2, seed));
    EXPECT_EQ(r.detected_at_step, Step::V1) << seed;
    EXPECT_FALSE(r.forgery_accepted);
  }
}

TEST(TotalBreak, RejectsZouTarget) { EXPECT_THROW(total_break_attack(attack(Protocol::Zou, 2, 1)), Error); }

TEST(GaoDisturbance, ZouAcceptsThenDisavowalSucceeds) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AttackReport r = gao_disturbance_attack(attack(Protocol::Zou, 4, seed));
    EXPECT_EQ(r.transcript.outcome, Outcome::Accepted) << seed;
    EXPECT_EQ(r.dispute_ruling, Ruling::SignatureInvalid);
    EXPECT_TRUE(r.disavowal_upheld);
  }
}

TEST(GaoDisturbance, ImprovedDetectsAtV3) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AttackReport r = gao_disturbance_attack(attack(Protocol::Improved, 4, seed));
    EXPECT_EQ(r.detected_at_step, Step::V3) << seed;
    EXPECT_EQ(r.transcript.verdicts.v_b, false);
    EXPECT_FALSE(r.disavowal_upheld);
  }
}

TEST(GaoDisturbance, EveryNonIdentityWordIsDetected) {
  for (PauliWord w : {PauliWord::sigma_x(), PauliWord::sigma_z(), PauliWord{true, true, 0}}) {
    AttackConfig c = attack(Protocol::Improved, 2, 6);
    c.disturbance = w;
    EXPECT_EQ(gao_disturbance_attack(c).detected_at_step, Step::V3) << to_string(w);
  }
}

TEST(GaoDisturbance, IdentityWordIsNoAttack) {
  for (Protocol p : {Protocol::Zou, Protocol::Improved}) {
    AttackConfig c = attack(p, 3, 6);
    c.disturbance = PauliWord::identity();
    const AttackReport r = gao_disturbance_attack(c);
    EXPECT_EQ(r.transcript.outcome, Outcome::Accepted);
    EXPECT_EQ(r.dispute_ruling, Ruling::SignatureValid);
    EXPECT_FALSE(r.disavowal_upheld);
  }
}

TEST(GaoDisturbance, RecordsAppliedWords) {
  AttackConfig c = attack(Protocol::Zou, 4, 2);
  auto strategy = std::make_shared<GaoDisturbanceStrategy>();
  c.protocol.strategy = strategy;
  run_zou(c.protocol);
  ASSERT_EQ(strategy->applied().size(), 4u);
  for (const auto& w : strategy->applied()) EXPECT_FALSE(w.is_identity_up_to_phase());
}

TEST(GaoDisturbance, RejectsLiTarget) { EXPECT_THROW(gao_disturbance_attack(attack(Protocol::LiBell, 2, 1)), Error); }

TEST(AttackContext, ExposesOnlyAliceState) {
  // The attacker's view has no handle on Bob's or the arbitrator's keys.
  class Probe : public Strategy {
   public:
    std::string name() const override { return "probe"; }
    void tap(ChannelMessage&, AttackContext& ctx) override {
      EXPECT_EQ(ctx.alice.name, Party::Alice);
      EXPECT_FALSE(ctx.alice.holds(KeyLabel::KB));
    }
  };
  AttackConfig c = attack(Protocol::Zou, 2, 1);
  c.protocol.strategy = std::make_shared<Probe>();
  run_zou(c.protocol);
}

TEST(AttackReport, SerializesWithHeaderBlock) {
  const AttackReport r = key_extraction_attack(attack(Protocol::Zou, 2, 4));
  const std::string s = serialize(r);
  EXPECT_EQ(s.rfind(std::string(kReportFormatHeader) + "\n[attack]\n", 0), 0u);
  EXPECT_NE(s.find("name = key-extraction"), std::string::npos);
  EXPECT_NE(s.find("key_recovery_exact = true"), std::string::npos);
  EXPECT_NE(s.find("[outcome]"), std::string::npos);
  EXPECT_EQ(s, serialize(key_extraction_attack(attack(Protocol::Zou, 2, 4))));
}

}  // namespace
}  // namespace aqs
