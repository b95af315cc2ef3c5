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

#include "aqs/core/types.hpp"

#include "aqs/core/gates.hpp"

namespace aqs {

std::string_view to_string(Party p) {
  switch (p) {
    case Party::Alice: return "Alice";
    case Party::Bob: return "Bob";
    case Party::Arbitrator: return "Arbitrator";
    case Party::Channel: return "Channel";
  }
  return "?";
}

std::string_view to_string(BellKind k) {
  switch (k) {
    case BellKind::PhiPlus: return "phi+";
    case BellKind::PhiMinus: return "phi-";
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PsiMinus: return "psi-";
  }
  return "?";
}

BellKind bell_kind_from_string(std::string_view s) {
  for (BellKind k : kAllBellKinds) {
    if (to_string(k) == s) return k;
  }
  throw Error("unknown Bell kind: " + std::string(s));
}

Complex PauliWord::phase_value() const { return phase_of<double>(*this); }

PauliWord operator*(const PauliWord& a, const PauliWord& b) {
  // a.phase X^ax Z^az . b.phase X^bx Z^bz; moving Z^az past X^bx costs (-1)^(az*bx).
  std::uint8_t phase = static_cast<std::uint8_t>(a.phase + b.phase);
  if (a.z && b.x) phase = static_cast<std::uint8_t>(phase + 2);
  return PauliWord{a.x != b.x, a.z != b.z, static_cast<std::uint8_t>(phase & 3u)};
}

std::string to_string(const PauliWord& w) {
  static constexpr const char* kPhase[] = {"+", "+i", "-", "-i"};
  std::string out = kPhase[w.phase & 3u];
  if (!w.x && !w.z) return out + "I";
  if (w.x) out += "X";
  if (w.z) out += "Z";
  return out;
}

}  // namespace aqs
