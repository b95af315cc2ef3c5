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

namespace aqs {

Ruling resolve_dispute(StateRegister& reg, const SignatureRecord& record, const PartyState& arbitrator,
                       const CompareOptions& options) {
  if (!record.r) throw Error("missing r");
  if (record.protocol == Protocol::LiBell) throw Error("the Bell-state protocol has no dispute procedure");
  for (const auto& sig : record.signatures) {
    if (sig.size() != record.message.size()) throw Error("signature length does not match message");
  }
  const Key& ka = arbitrator.key(KeyLabel::KA);
  const HandleSeq& p = record.message;

  if (record.protocol == Protocol::Zou) {
    qotp_encrypt(reg, *record.r, p, 0);
  } else {
    signing_transform(reg, *record.r, p, SigningMode::NonCommutative, 0);
  }
  qotp_encrypt(reg, ka, p, record.ka_offset);

  bool valid = !record.signatures.empty();
  for (const auto& sig : record.signatures) valid = state_compare(reg, p, sig, options) && valid;

  qotp_decrypt(reg, ka, p, record.ka_offset);
  if (record.protocol == Protocol::Zou) {
    qotp_decrypt(reg, *record.r, p, 0);
  } else {
    signing_transform_inverse(reg, *record.r, p, SigningMode::NonCommutative, 0);
  }
  return valid ? Ruling::SignatureValid : Ruling::SignatureInvalid;
}

}  // namespace aqs
