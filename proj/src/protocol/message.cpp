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

#include "aqs/protocol/message.hpp"

#include <cmath>
#include <numbers>

#include "aqs/core/gates.hpp"

namespace aqs {

Message random_message(std::size_t n, std::mt19937_64& rng) {
  Message m(n);
  for (auto& q : m) {
    // Uniform on the Bloch sphere.
    const double theta = std::acos(1.0 - 2.0 * uniform01(rng));
    const double phi = 2.0 * std::numbers::pi * uniform01(rng);
    q.alpha = Complex(std::cos(theta / 2.0), 0.0);
    q.beta = std::polar(std::sin(theta / 2.0), phi);
  }
  return m;
}

Message orthogonal_message(const Message& m) {
  Message out;
  out.reserve(m.size());
  for (const auto& q : m) out.push_back({-std::conj(q.beta), std::conj(q.alpha)});
  return out;
}

Eigen::VectorXcd message_vector(const Message& m) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
  for (const auto& q : m) {
    Eigen::Vector2cd qv(q.alpha, q.beta);
    v = kron(v, qv.normalized());
  }
  return v;
}

HandleSeq prepare_message(StateRegister& reg, const Message& m, Party owner) {
  HandleSeq out;
  out.reserve(m.size());
  for (const auto& q : m) out.push_back(reg.alloc_qubit(q.alpha, q.beta, owner));
  return out;
}

}  // namespace aqs
