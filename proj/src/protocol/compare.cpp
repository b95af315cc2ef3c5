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

#include "aqs/protocol/compare.hpp"

#include <numeric>
#include <string>

#include "aqs/core/gates.hpp"

namespace aqs {
namespace {

Eigen::MatrixXcd controlled_swap() {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(8, 8);
  m(5, 5) = 0.0;
  m(6, 6) = 0.0;
  m(5, 6) = 1.0;
  m(6, 5) = 1.0;
  return m;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

std::string_view to_string(CompareMode mode) { return mode == CompareMode::Exact ? "exact" : "swap_test"; }

CompareMode compare_mode_from_string(std::string_view s) {
  if (s == "exact") return CompareMode::Exact;
  if (s == "swap_test" || s == "swap-test") return CompareMode::SwapTest;
  throw Error("unknown compare mode: " + std::string(s));
}

bool compare_exact(const StateRegister& reg, std::span<const QubitHandle> a, std::span<const QubitHandle> b,
                   double tolerance) {
  if (a.size() != b.size()) throw Error("compared sequences differ in length");
  const std::size_t n = a.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool linked = reg.same_class(a[i], a[j]) || reg.same_class(a[i], b[j]) ||
                          reg.same_class(b[i], a[j]) || reg.same_class(b[i], b[j]);
      if (linked) parent[find_root(parent, i)] = find_root(parent, j);
    }
  }
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    const std::size_t root = find_root(parent, i);
    HandleSeq block_a, block_b;
    for (std::size_t j = i; j < n; ++j) {
      if (find_root(parent, j) != root) continue;
      done[j] = true;
      block_a.push_back(a[j]);
      block_b.push_back(b[j]);
    }
    if (reg.overlap(block_a, block_b) < 1.0 - tolerance) return false;
  }
  return true;
}

bool compare_exact(const StateRegister& reg, std::span<const QubitHandle> a, const Eigen::VectorXcd& reference,
                   double tolerance) {
  return reg.fidelity(a, reference) >= 1.0 - tolerance;
}

bool swap_test(StateRegister& reg, std::span<const QubitHandle> a, std::span<const QubitHandle> b) {
  if (a.size() != b.size()) throw Error("compared sequences differ in length");
  static const Eigen::MatrixXcd cswap = controlled_swap();
  const Eigen::Matrix2cd h = hadamard<double>();
  bool pass = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const QubitHandle ancilla = reg.alloc_qubit(1.0, 0.0);
    reg.apply_unitary(ancilla, h);
    const QubitHandle triple[] = {ancilla, a[i], b[i]};
    reg.apply_unitary(triple, cswap);
    reg.apply_unitary(ancilla, h);
    pass = (reg.measure_z(ancilla) == 0) && pass;
    const QubitHandle spent[] = {a[i], b[i]};
    reg.discard(spent);
  }
  return pass;
}

bool compare_swap_test(StateRegister& reg, std::span<const HandleSeq> a_copies, std::span<const HandleSeq> b_copies,
                       std::size_t trials) {
  if (trials == 0 || a_copies.size() < trials || b_copies.size() < trials) {
    throw Error("swap test needs " + std::to_string(trials) + " copies of each state");
  }
  bool pass = true;
  for (std::size_t t = 0; t < trials; ++t) pass = swap_test(reg, a_copies[t], b_copies[t]) && pass;
  return pass;
}

bool state_compare(StateRegister& reg, std::span<const QubitHandle> a, std::span<const QubitHandle> b,
                   const CompareOptions& options) {
  if (a.size() != b.size()) throw Error("compared sequences differ in length");
  if (options.mode == CompareMode::Exact) return compare_exact(reg, a, b, options.tolerance);

  HandleSeq both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  bool pass = true;
  for (std::size_t t = 0; t < options.swap_trials; ++t) {
    auto dup = reg.duplicate(both);
    const std::span<const QubitHandle> copies(dup.copies);
    pass = swap_test(reg, copies.first(a.size()), copies.subspan(a.size())) && pass;
    reg.discard(dup.environment);
  }
  return pass;
}

}  // namespace aqs
