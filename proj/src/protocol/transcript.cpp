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

#include "aqs/protocol/transcript.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace aqs {

std::string_view to_string(Protocol p) {
  switch (p) {
    case Protocol::LiBell: return "li_bell";
    case Protocol::Zou: return "zou";
    case Protocol::Improved: return "improved";
  }
  return "?";
}

Protocol protocol_from_string(std::string_view s) {
  if (s == "li_bell" || s == "li") return Protocol::LiBell;
  if (s == "zou") return Protocol::Zou;
  if (s == "improved") return Protocol::Improved;
  throw Error("unknown protocol: " + std::string(s));
}

std::string_view to_string(Step s) {
  static constexpr std::string_view kNames[] = {"S1", "S2", "S3", "S4", "S5", "V1",
                                                "V2", "V3", "V4", "V5", "dispute"};
  return kNames[static_cast<int>(s)];
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Accepted: return "accepted";
    case Outcome::Rejected: return "rejected";
    case Outcome::Aborted: return "aborted";
  }
  return "?";
}

bool Payload::has_slot(std::string_view name) const {
  return std::any_of(slots.begin(), slots.end(), [&](const Slot& s) { return s.name == name; });
}

HandleSeq& Payload::slot(std::string_view name) {
  for (auto& s : slots) {
    if (s.name == name) return s.qubits;
  }
  throw Error("payload has no slot " + std::string(name));
}

const HandleSeq& Payload::slot(std::string_view name) const { return const_cast<Payload*>(this)->slot(name); }

void Payload::set_slot(std::string_view name, HandleSeq qubits) {
  for (auto& s : slots) {
    if (s.name == name) {
      s.qubits = std::move(qubits);
      return;
    }
  }
  slots.push_back({std::string(name), std::move(qubits)});
}

void PublicBoard::post(Party party, std::string name, std::string value) {
  posts_.push_back({party, std::move(name), std::move(value)});
}

std::optional<std::string> PublicBoard::latest(std::string_view name) const {
  for (auto it = posts_.rbegin(); it != posts_.rend(); ++it) {
    if (it->name == name) return it->value;
  }
  return std::nullopt;
}

void KeyPlan::add(KeyLabel key, std::size_t length, Step step, std::string purpose) {
  uses_.push_back({key, total(key), length, step, std::move(purpose)});
}

const KeyUse& KeyPlan::at(std::string_view purpose) const {
  for (const auto& u : uses_) {
    if (u.purpose == purpose) return u;
  }
  throw Error("no key use named " + std::string(purpose));
}

std::size_t KeyPlan::total(KeyLabel key) const {
  std::size_t end = 0;
  for (const auto& u : uses_) {
    if (u.key == key) end = std::max(end, u.offset + u.length);
  }
  return end;
}

bool Verdicts::all_defined_pass() const { return v.value_or(true) && v_t.value_or(true) && v_b.value_or(true); }

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

std::string format_complex(Complex z) { return "(" + format_real(z.real()) + "," + format_real(z.imag()) + ")"; }

std::string snapshot_payload(const StateRegister& reg, const Payload& payload) {
  std::ostringstream out;
  std::vector<std::uint64_t> seen;
  for (const auto& slot : payload.slots) {
    for (const auto& h : slot.qubits) {
      if (!reg.is_live(h)) {
        out << "q" << h.id << " = consumed\n";
        continue;
      }
      const auto members = reg.class_members(h);
      if (std::find(seen.begin(), seen.end(), members.front()) != seen.end()) continue;
      seen.push_back(members.front());
      out << "state";
      for (auto id : members) out << " q" << id;
      out << " =";
      const Eigen::VectorXcd& v = reg.class_vector(h);
      for (Eigen::Index i = 0; i < v.size(); ++i) out << ' ' << format_complex(v(i));
      out << '\n';
    }
  }
  return out.str();
}

namespace {

std::string verdict_text(const std::optional<bool>& v) {
  if (!v) return "undefined";
  return *v ? "1" : "0";
}

void write_block(std::ostream& out, std::string_view prefix, const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) out << prefix << line << '\n';
}

}  // namespace

std::string serialize_body(const Transcript& t) {
  std::ostringstream out;
  out << "[run]\n";
  out << "protocol = " << to_string(t.protocol) << '\n';
  out << "seed = " << t.seed << '\n';
  for (const auto& [k, v] : t.config) out << "config." << k << " = " << v << '\n';

  out << "[keys]\n";
  for (const auto& u : t.key_uses) {
    out << "use " << to_string(u.key) << " bits " << u.offset << ".." << (u.offset + u.length) << " step "
        << to_string(u.step) << " for " << u.purpose << '\n';
  }

  for (std::size_t i = 0; i < t.messages.size(); ++i) {
    const ChannelMessage& m = t.messages[i];
    out << "[message " << (i + 1) << "]\n";
    out << "step = " << to_string(m.step) << '\n';
    out << "from = " << to_string(m.from) << '\n';
    out << "to = " << to_string(m.to) << '\n';
    for (const auto& s : m.payload.slots) {
      out << "slot " << s.name << " =";
      for (const auto& h : s.qubits) out << " q" << h.id;
      out << '\n';
    }
    for (const auto& f : m.payload.classical) out << "field " << f.name << " = " << f.value << '\n';
    write_block(out, "sent.", m.sent_state);
    for (const auto& note : m.tap_notes) out << "tap = " << note << '\n';
    write_block(out, "delivered.", m.delivered_state);
  }

  out << "[board]\n";
  for (const auto& p : t.board.posts()) out << "post " << to_string(p.party) << ' ' << p.name << " = " << p.value << '\n';

  out << "[events]\n";
  for (const auto& e : t.events) out << "event = " << e << '\n';

  out << "[verdicts]\n";
  out << "V = " << verdict_text(t.verdicts.v) << '\n';
  out << "V_T = " << verdict_text(t.verdicts.v_t) << '\n';
  out << "V_B = " << verdict_text(t.verdicts.v_b) << '\n';

  out << "[outcome]\n";
  out << "outcome = " << to_string(t.outcome) << '\n';
  out << "ended_at = " << (t.ended_at ? std::string(to_string(*t.ended_at)) : std::string("none")) << '\n';
  out << "recovered_fidelity = " << (t.recovered_fidelity ? format_real(*t.recovered_fidelity) : std::string("none"))
      << '\n';
  return out.str();
}

std::string serialize(const Transcript& t) { return std::string(kReportFormatHeader) + "\n" + serialize_body(t); }

}  // namespace aqs
