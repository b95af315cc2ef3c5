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

#include "aqs/crypto/key.hpp"

namespace aqs {

std::string_view to_string(KeyLabel label) {
  switch (label) {
    case KeyLabel::KA: return "K_A";
    case KeyLabel::KB: return "K_B";
    case KeyLabel::KAB: return "K_AB";
    case KeyLabel::R: return "r";
    case KeyLabel::Other: return "other";
  }
  return "?";
}

Key Key::random(std::size_t nbits, KeyLabel label, std::mt19937_64& rng) {
  std::vector<bool> bits(nbits);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < nbits; ++i) {
    if (i % 64 == 0) word = rng();
    bits[i] = (word >> (63 - i % 64)) & 1u;
  }
  return Key(std::move(bits), label);
}

Key Key::from_bit_string(std::string_view s, KeyLabel label) {
  std::vector<bool> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw Error("invalid bit string");
    bits.push_back(c == '1');
  }
  return Key(std::move(bits), label);
}

Key Key::from_hex(std::string_view hex, std::size_t nbits, KeyLabel label) {
  if (nbits > hex.size() * 4 || nbits + 4 <= hex.size() * 4) throw Error("hex length does not match bit count");
  std::vector<bool> bits;
  for (char c : hex) {
    int v = 0;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else throw Error("invalid hex digit");
    for (int b = 3; b >= 0; --b) bits.push_back((v >> b) & 1);
  }
  bits.resize(nbits);
  return Key(std::move(bits), label);
}

std::string Key::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bits_.size(); i += 4) {
    int v = 0;
    for (std::size_t b = 0; b < 4; ++b) v = (v << 1) | (i + b < bits_.size() && bits_[i + b] ? 1 : 0);
    out.push_back(kDigits[v]);
  }
  return out;
}

std::string Key::to_bit_string() const {
  std::string out;
  for (bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

Key Key::segment(std::size_t offset, std::size_t length) const {
  if (offset + length > bits_.size()) throw Error("key exhausted");
  return Key(std::vector<bool>(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                               bits_.begin() + static_cast<std::ptrdiff_t>(offset + length)),
             label_);
}

KeySchedule KeySchedule::from_key(const Key& key, std::size_t offset, std::size_t qubits) {
  if (offset + 2 * qubits > key.size()) throw Error("key exhausted");
  KeySchedule s;
  s.pairs_.reserve(qubits);
  for (std::size_t i = 0; i < qubits; ++i) {
    s.pairs_.push_back(KeyPair{key.bit(offset + 2 * i), key.bit(offset + 2 * i + 1)});
  }
  return s;
}

PauliWord KeySchedule::encrypt_word(std::size_t i) const {
  const KeyPair& p = pairs_.at(i);
  return PauliWord{p.x, p.z, 0};
}

PauliWord KeySchedule::decrypt_word(std::size_t i) const {
  const KeyPair& p = pairs_.at(i);
  return PauliWord{false, p.z, 0} * PauliWord{p.x, false, 0};
}

}  // namespace aqs
