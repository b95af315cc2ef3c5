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

#include <sstream>

#include "aqs/adversary/attacks.hpp"

namespace aqs {

std::string serialize(const AttackReport& r) {
  std::ostringstream out;
  out << kReportFormatHeader << '\n';
  out << "[attack]\n";
  out << "name = " << r.attack_name << '\n';
  out << "target = " << to_string(r.target) << '\n';
  out << "enabled = " << (r.enabled ? "true" : "false") << '\n';
  out << "recovered_key_bits = " << (r.recovered_key_bits.size() ? r.recovered_key_bits.to_bit_string() : "none")
      << '\n';
  out << "recovered_key_count = " << r.recovered_key_bits.size() << '\n';
  out << "target_key_bits = " << r.target_key_bits << '\n';
  out << "key_recovery_exact = " << (r.key_recovery_exact ? "true" : "false") << '\n';
  out << "forgery_accepted = " << (r.forgery_accepted ? "true" : "false") << '\n';
  out << "disavowal_upheld = " << (r.disavowal_upheld ? "true" : "false") << '\n';
  out << "detected_at_step = " << (r.detected_at_step ? std::string(to_string(*r.detected_at_step)) : "none") << '\n';
  out << "dispute_ruling = " << (r.dispute_ruling ? std::string(to_string(*r.dispute_ruling)) : "none") << '\n';
  out << serialize_body(r.transcript);
  return out.str();
}

}  // namespace aqs
