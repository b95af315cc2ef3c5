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

#include "aqs/core/bell.hpp"

namespace aqs {

PauliWord teleport_correction(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus: return PauliWord::identity();
    case BellKind::PhiMinus: return PauliWord::sigma_z();
    case BellKind::PsiPlus: return PauliWord::sigma_x();
    case BellKind::PsiMinus:
      // sigma_z sigma_x (x first) == -sigma_x sigma_z
      return PauliWord::sigma_z() * PauliWord::sigma_x();
  }
  return PauliWord::identity();
}

BellLabel bell_label(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus: return {false, false};
    case BellKind::PhiMinus: return {false, true};
    case BellKind::PsiPlus: return {true, false};
    case BellKind::PsiMinus: return {true, true};
  }
  return {};
}

BellKind bell_kind_from_label(BellLabel label) {
  if (!label.x) return label.z ? BellKind::PhiMinus : BellKind::PhiPlus;
  return label.z ? BellKind::PsiMinus : BellKind::PsiPlus;
}

}  // namespace aqs
