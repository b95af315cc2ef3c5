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
#include <string_view>

#include <Eigen/Dense>

#include "aqs/core/state_register.hpp"

namespace aqs {

enum class CompareMode { Exact, SwapTest };

std::string_view to_string(CompareMode mode);
CompareMode compare_mode_from_string(std::string_view s);

struct CompareOptions {
  CompareMode mode = CompareMode::Exact;
  double tolerance = 1e-9;
  std::size_t swap_trials = 16;
};

/// Non-destructive. Positions are grouped into blocks whose qubits share
/// entanglement classes; each block passes iff Tr(rho_a rho_b) >= 1 - tolerance.
/// For product states this is the per-qubit check.
bool compare_exact(const StateRegister& reg, std::span<const QubitHandle> a, std::span<const QubitHandle> b,
                   double tolerance);
/// Joint fidelity of `a` with a pure reference.
bool compare_exact(const StateRegister& reg, std::span<const QubitHandle> a, const Eigen::VectorXcd& reference,
                   double tolerance);

/// One destructive swap test per position (ancilla, controlled-SWAP,
/// Hadamard, Z readout). Passes iff every ancilla reads 0. Consumes a and b.
bool swap_test(StateRegister& reg, std::span<const QubitHandle> a, std::span<const QubitHandle> b);

/// Runs `trials` swap tests on caller-supplied copies; passes iff no trial
/// fails. Throws Error when fewer than `trials` copies are supplied.
bool compare_swap_test(StateRegister& reg, std::span<const HandleSeq> a_copies, std::span<const HandleSeq> b_copies,
                       std::size_t trials);

/// Verdict used by the protocol parties. In swap-test mode the copies are
/// fresh duplicates of the joint state of (a, b); a and b stay untouched.
bool state_compare(StateRegister& reg, std::span<const QubitHandle> a, std::span<const QubitHandle> b,
                   const CompareOptions& options);

}  // namespace aqs
