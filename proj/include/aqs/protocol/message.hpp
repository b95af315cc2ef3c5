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
#include <vector>

#include <Eigen/Dense>

#include "aqs/core/state_register.hpp"

namespace aqs {

struct QubitState {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};
};

/// Classical description of a product message |p_1> (x) ... (x) |p_n>.
using Message = std::vector<QubitState>;

/// Haar-random single-qubit states.
Message random_message(std::size_t n, std::mt19937_64& rng);
/// Qubit-wise orthogonal complement: (a, b) -> (-conj(b), conj(a)).
Message orthogonal_message(const Message& m);
/// Dense product vector, first qubit most significant.
Eigen::VectorXcd message_vector(const Message& m);
/// Allocates one fresh copy of the message.
HandleSeq prepare_message(StateRegister& reg, const Message& m, Party owner);

}  // namespace aqs
