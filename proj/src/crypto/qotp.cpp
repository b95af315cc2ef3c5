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

#include "aqs/crypto/qotp.hpp"

#include <array>

#include "aqs/core/bell.hpp"

namespace aqs {
namespace {

std::array<bool, 3> signing_bits(const Key& key, std::size_t offset, std::size_t qubit, SigningMode mode) {
  const std::size_t per = signing_bits_per_qubit(mode);
  std::array<bool, 3> bits{};
  for (std::size_t b = 0; b < per; ++b) bits[b] = key.bit(offset + per * qubit + b);
  return bits;
}

void check_signing_key(const Key& key, std::size_t offset, std::size_t qubits, SigningMode mode) {
  if (offset + signing_bits_per_qubit(mode) * qubits > key.size()) throw Error("key exhausted");
}

}  // namespace

void qotp_encrypt(StateRegister& reg, const Key& key, std::span<const QubitHandle> qubits, std::size_t offset) {
  const KeySchedule schedule = KeySchedule::from_key(key, offset, qubits.size());
  for (std::size_t i = 0; i < qubits.size(); ++i) reg.apply_pauli(qubits[i], schedule.encrypt_word(i));
}

void qotp_decrypt(StateRegister& reg, const Key& key, std::span<const QubitHandle> qubits, std::size_t offset) {
  const KeySchedule schedule = KeySchedule::from_key(key, offset, qubits.size());
  for (std::size_t i = 0; i < qubits.size(); ++i) reg.apply_pauli(qubits[i], schedule.decrypt_word(i));
}

std::string_view to_string(SigningMode mode) {
  return mode == SigningMode::Pauli ? "pauli" : "non_commutative";
}

SigningMode signing_mode_from_string(std::string_view s) {
  if (s == "pauli") return SigningMode::Pauli;
  if (s == "non_commutative") return SigningMode::NonCommutative;
  throw Error("unknown signing mode: " + std::string(s));
}

std::size_t signing_bits_per_qubit(SigningMode mode) { return mode == SigningMode::Pauli ? 1 : 3; }

void signing_transform(StateRegister& reg, const Key& key, std::span<const QubitHandle> qubits, SigningMode mode,
                       std::size_t offset) {
  check_signing_key(key, offset, qubits.size(), mode);
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    const auto bits = signing_bits(key, offset, i, mode);
    reg.apply_unitary(qubits[i], signing_matrix<double>(mode, bits));
  }
}

void signing_transform_inverse(StateRegister& reg, const Key& key, std::span<const QubitHandle> qubits,
                               SigningMode mode, std::size_t offset) {
  check_signing_key(key, offset, qubits.size(), mode);
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    const auto bits = signing_bits(key, offset, i, mode);
    reg.apply_unitary(qubits[i], signing_matrix<double>(mode, bits).adjoint());
  }
}

KeyPair infer_key_pair(BellKind initial, BellKind measured) {
  const BellLabel a = bell_label(initial);
  const BellLabel b = bell_label(measured);
  return KeyPair{a.z != b.z, a.x != b.x};
}

}  // namespace aqs
