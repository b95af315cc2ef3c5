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

#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "aqs/core/gates.hpp"
#include "aqs/core/state_register.hpp"
#include "aqs/crypto/key.hpp"

namespace aqs {

/// Quantum one-time pad. Qubit i gets sigma_x^{K^{2i}} sigma_z^{K^{2i-1}},
/// with key bits counted from `offset`. Throws Error("key exhausted") when
/// fewer than 2 * qubits.size() bits remain.
void qotp_encrypt(StateRegister& reg, const Key& key, std::span<const QubitHandle> qubits, std::size_t offset = 0);
void qotp_decrypt(StateRegister& reg, const Key& key, std::span<const QubitHandle> qubits, std::size_t offset = 0);

enum class SigningMode {
  /// sigma_x^{1+b} sigma_z^{b}, one key bit per qubit.
  Pauli,
  /// H^{b3} sigma_x^{1+b1} sigma_z^{b1+b2}, three key bits per qubit.
  NonCommutative,
};

std::string_view to_string(SigningMode mode);
SigningMode signing_mode_from_string(std::string_view s);
std::size_t signing_bits_per_qubit(SigningMode mode);

/// Single-qubit signing operator for the key bits of one qubit. `bits` must
/// hold signing_bits_per_qubit(mode) entries.
template <typename Scalar = double>
Matrix2c<Scalar> signing_matrix(SigningMode mode, std::span<const bool> bits) {
  if (mode == SigningMode::Pauli) {
    const bool b = bits[0];
    return pauli_matrix<Scalar>(PauliWord{!b, b, 0});
  }
  const bool b1 = bits[0], b2 = bits[1], b3 = bits[2];
  Matrix2c<Scalar> m = pauli_matrix<Scalar>(PauliWord{!b1, b1 != b2, 0});
  if (b3) m = hadamard<Scalar>() * m;
  return m;
}

/// Applies the key-controlled signing transform to each qubit in place.
void signing_transform(StateRegister& reg, const Key& key, std::span<const QubitHandle> qubits, SigningMode mode,
                       std::size_t offset = 0);
void signing_transform_inverse(StateRegister& reg, const Key& key, std::span<const QubitHandle> qubits,
                               SigningMode mode, std::size_t offset = 0);

/// Exponent pair p with measured = (p (x) I) initial, up to phase. For a
/// fixed initial state this is a bijection onto the four Bell kinds.
KeyPair infer_key_pair(BellKind initial, BellKind measured);

}  // namespace aqs
