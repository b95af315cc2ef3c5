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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aqs {

using Complex = std::complex<double>;

/// Thrown for every contract violation in the library (bad handles, short
/// keys, malformed configs).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Party { Alice, Bob, Arbitrator, Channel };

std::string_view to_string(Party p);

/// Opaque qubit identifier. Equality is by id only; the owner is a label
/// that travels with the value.
struct QubitHandle {
  std::uint64_t id = 0;
  Party owner = Party::Channel;

  friend bool operator==(const QubitHandle& a, const QubitHandle& b) { return a.id == b.id; }
};

using HandleSeq = std::vector<QubitHandle>;

/// The four Bell vectors, first qubit most significant:
/// PhiPlus (|00>+|11>)/sqrt2, PhiMinus (|00>-|11>)/sqrt2,
/// PsiPlus (|01>+|10>)/sqrt2, PsiMinus (|01>-|10>)/sqrt2.
enum class BellKind : std::uint8_t { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

inline constexpr BellKind kAllBellKinds[] = {BellKind::PhiPlus, BellKind::PhiMinus,
                                             BellKind::PsiPlus, BellKind::PsiMinus};

std::string_view to_string(BellKind k);
BellKind bell_kind_from_string(std::string_view s);

/// phase * sigma_x^x * sigma_z^z. The z factor acts first on a ket.
/// Phase is stored as a power of i (0: +1, 1: +i, 2: -1, 3: -i).
struct PauliWord {
  bool x = false;
  bool z = false;
  std::uint8_t phase = 0;

  static constexpr PauliWord identity() { return {}; }
  static constexpr PauliWord sigma_x() { return {true, false, 0}; }
  static constexpr PauliWord sigma_z() { return {false, true, 0}; }

  Complex phase_value() const;
  bool is_identity_up_to_phase() const { return !x && !z; }

  friend bool operator==(const PauliWord&, const PauliWord&) = default;
};

/// Operator product a*b (b acts first). Tracks sigma_z sigma_x = -sigma_x sigma_z.
PauliWord operator*(const PauliWord& a, const PauliWord& b);

std::string to_string(const PauliWord& w);

}  // namespace aqs
