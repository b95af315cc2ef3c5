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

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aqs/core/types.hpp"

namespace aqs {

enum class KeyLabel { KA, KB, KAB, R, Other };

std::string_view to_string(KeyLabel label);

/// Classical secret bitstring. Bit 0 is the first key bit (K^1).
class Key {
 public:
  Key() = default;
  Key(std::vector<bool> bits, KeyLabel label) : bits_(std::move(bits)), label_(label) {}

  static Key random(std::size_t nbits, KeyLabel label, std::mt19937_64& rng);
  /// Parses a string of '0'/'1' characters.
  static Key from_bit_string(std::string_view bits, KeyLabel label = KeyLabel::Other);
  /// Inverse of to_hex(); `nbits` trims the zero padding of the last digit.
  static Key from_hex(std::string_view hex, std::size_t nbits, KeyLabel label = KeyLabel::Other);

  /// Lowercase hex, first key bit in the most significant position,
  /// zero-padded on the right to a whole digit.
  std::string to_hex() const;
  std::string to_bit_string() const;

  std::size_t size() const { return bits_.size(); }
  bool bit(std::size_t i) const { return bits_.at(i); }
  const std::vector<bool>& bits() const { return bits_; }
  KeyLabel label() const { return label_; }

  Key segment(std::size_t offset, std::size_t length) const;

  friend bool operator==(const Key&, const Key&) = default;

 private:
  std::vector<bool> bits_;
  KeyLabel label_ = KeyLabel::Other;
};

/// Per-qubit exponents consumed by the one-time pad.
struct KeyPair {
  bool z = false;
  bool x = false;

  friend bool operator==(const KeyPair&, const KeyPair&) = default;
};

/// Splits key bits into (z, x) pairs: pair i is (K^{2i-1}, K^{2i}) counted
/// from `offset`. This is the only place bitstrings become exponents.
class KeySchedule {
 public:
  static KeySchedule from_key(const Key& key, std::size_t offset, std::size_t qubits);

  std::size_t size() const { return pairs_.size(); }
  const KeyPair& operator[](std::size_t i) const { return pairs_.at(i); }
  std::span<const KeyPair> pairs() const { return pairs_; }

  /// sigma_x^x sigma_z^z (z acts first).
  PauliWord encrypt_word(std::size_t i) const;
  /// sigma_z^z sigma_x^x (x acts first).
  PauliWord decrypt_word(std::size_t i) const;

 private:
  std::vector<KeyPair> pairs_;
};

}  // namespace aqs
