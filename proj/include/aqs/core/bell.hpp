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

#include "aqs/core/types.hpp"

namespace aqs {

/// Pauli word that restores a teleported qubit, given the Bell outcome
/// observed on (message, sender half) of a shared PhiPlus pair.
PauliWord teleport_correction(BellKind kind);

/// Exponents (x, z) with kind proportional to (X^x Z^z (x) I)|PhiPlus>.
struct BellLabel {
  bool x = false;
  bool z = false;
};

BellLabel bell_label(BellKind kind);
BellKind bell_kind_from_label(BellLabel label);

}  // namespace aqs
