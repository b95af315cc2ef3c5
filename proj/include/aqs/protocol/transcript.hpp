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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aqs/core/state_register.hpp"
#include "aqs/crypto/key.hpp"

namespace aqs {

inline constexpr std::string_view kReportFormatHeader = "aqs-report-format 1";

enum class Protocol { LiBell, Zou, Improved };
enum class Step { S1, S2, S3, S4, S5, V1, V2, V3, V4, V5, Dispute };
enum class Outcome { Accepted, Rejected, Aborted };

std::string_view to_string(Protocol p);
Protocol protocol_from_string(std::string_view s);
std::string_view to_string(Step s);
std::string_view to_string(Outcome o);

struct Slot {
  std::string name;
  HandleSeq qubits;
};

struct ClassicalField {
  std::string name;
  std::string value;
};

struct Payload {
  std::vector<Slot> slots;
  std::vector<ClassicalField> classical;

  bool has_slot(std::string_view name) const;
  HandleSeq& slot(std::string_view name);
  const HandleSeq& slot(std::string_view name) const;
  void set_slot(std::string_view name, HandleSeq qubits);
};

struct ChannelMessage {
  Party from = Party::Channel;
  Party to = Party::Channel;
  Step step = Step::S1;
  Payload payload;
  std::string sent_state;       // class vectors at send time
  std::string delivered_state;  // empty unless a tap changed the payload
  std::vector<std::string> tap_notes;
};

struct BoardPost {
  Party party = Party::Channel;
  std::string name;
  std::string value;
};

/// Append-only broadcast log.
class PublicBoard {
 public:
  void post(Party party, std::string name, std::string value);
  const std::vector<BoardPost>& posts() const { return posts_; }
  std::optional<std::string> latest(std::string_view name) const;

 private:
  std::vector<BoardPost> posts_;
};

/// One use of key material: bits [offset, offset + length) of `key`.
struct KeyUse {
  KeyLabel key = KeyLabel::Other;
  std::size_t offset = 0;
  std::size_t length = 0;
  Step step = Step::S1;
  std::string purpose;
};

/// Public key-bit budget of a protocol run.
class KeyPlan {
 public:
  void add(KeyLabel key, std::size_t length, Step step, std::string purpose);
  const KeyUse& at(std::string_view purpose) const;
  std::size_t total(KeyLabel key) const;
  const std::vector<KeyUse>& uses() const { return uses_; }

 private:
  std::vector<KeyUse> uses_;
};

struct Verdicts {
  std::optional<bool> v;
  std::optional<bool> v_t;
  std::optional<bool> v_b;

  bool all_defined_pass() const;
};

struct Transcript {
  Protocol protocol = Protocol::Zou;
  std::vector<std::pair<std::string, std::string>> config;
  std::uint64_t seed = 0;
  std::vector<KeyUse> key_uses;
  std::vector<ChannelMessage> messages;
  PublicBoard board;
  Verdicts verdicts;
  std::vector<std::string> events;
  Outcome outcome = Outcome::Aborted;
  std::optional<Step> ended_at;
  std::optional<double> recovered_fidelity;
};

/// Class vectors of every entanglement class touched by the payload.
std::string snapshot_payload(const StateRegister& reg, const Payload& payload);

std::string format_real(double x);
std::string format_complex(Complex z);

/// Stable structured text; begins with kReportFormatHeader.
std::string serialize(const Transcript& t);
/// Body without the format header, for embedding in larger reports.
std::string serialize_body(const Transcript& t);

}  // namespace aqs
