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
#include <map>
#include <random>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "aqs/core/types.hpp"

namespace aqs {

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// A pool of qubits partitioned into entanglement classes. Each class holds
/// the exact state vector of its members, first member most significant.
/// Classes merge on joint operations and shrink on measurement.
///
/// Not thread-safe: one register is one serialized world.
class StateRegister {
 public:
  static constexpr double kInputNormTolerance = 1e-9;
  static constexpr std::size_t kMaxClassQubits = 24;

  explicit StateRegister(std::uint64_t seed = 0);

  std::uint64_t seed() const { return seed_; }

  /// Throws Error("degenerate amplitude pair") on a zero vector; otherwise
  /// renormalizes if the input is off by more than kInputNormTolerance.
  QubitHandle alloc_qubit(Complex alpha, Complex beta, Party owner = Party::Channel);

  /// Allocates log2(amps.size()) qubits jointly in `amps`.
  HandleSeq alloc_state(const Eigen::VectorXcd& amps, Party owner = Party::Channel);

  std::pair<QubitHandle, QubitHandle> make_bell_pair(BellKind kind, Party first = Party::Channel,
                                                     Party second = Party::Channel);

  void apply_pauli(QubitHandle h, const PauliWord& word);
  void apply_unitary(QubitHandle h, const Eigen::Matrix2cd& u);
  /// `u` acts on the listed handles, first handle most significant.
  void apply_unitary(std::span<const QubitHandle> handles, const Eigen::MatrixXcd& u);

  /// Projective Bell measurement of (h1, h2). Both handles are consumed.
  BellKind bell_measure(QubitHandle h1, QubitHandle h2);
  /// Computational-basis measurement; the handle is consumed.
  int measure_z(QubitHandle h);
  /// Measures and drops each handle.
  void discard(std::span<const QubitHandle> handles);

  struct Duplicate {
    HandleSeq copies;       // one per requested handle, same order
    HandleSeq environment;  // cloned partners that were not requested
  };
  /// Clones every class touched by `handles` under fresh ids.
  Duplicate duplicate(std::span<const QubitHandle> handles);

  /// Reduced density operator of the listed handles, first handle most significant.
  Eigen::MatrixXcd reduced_density(std::span<const QubitHandle> handles) const;
  /// <ref| rho |ref> for the reduced state of `handles`.
  double fidelity(std::span<const QubitHandle> handles, const Eigen::VectorXcd& reference) const;
  /// Tr(rho_a rho_b): 1 iff both reduced states are the same pure state.
  double overlap(std::span<const QubitHandle> a, std::span<const QubitHandle> b) const;

  bool is_live(QubitHandle h) const { return where_.count(h.id) != 0; }
  bool same_class(QubitHandle a, QubitHandle b) const;
  const Eigen::VectorXcd& class_vector(QubitHandle h) const;
  std::vector<std::uint64_t> class_members(QubitHandle h) const;
  std::size_t live_qubits() const { return where_.size(); }
  std::size_t class_count() const { return classes_.size(); }
  /// Largest |norm - 1| over all classes.
  double max_norm_error() const;

  /// Uniform double in [0, 1) from the measurement stream.
  double next_uniform();

 private:
  struct EntClass {
    std::vector<std::uint64_t> members;
    Eigen::VectorXcd amps;
  };

  std::uint64_t new_class(EntClass c);
  std::uint64_t class_of(QubitHandle h) const;
  std::uint64_t merge(std::span<const QubitHandle> handles);
  std::size_t position(const EntClass& c, std::uint64_t id) const;
  void apply_in_class(EntClass& c, std::span<const std::size_t> positions, const Eigen::MatrixXcd& u);
  /// Measures `positions` of class `cid` against an orthonormal basis given
  /// as the columns of `basis`; returns the sampled column.
  std::size_t project(std::uint64_t cid, std::span<const std::size_t> positions, const Eigen::MatrixXcd& basis);
  /// Joint vector of every class touched by `handles`, with the listed
  /// handles moved to the most significant slots in list order.
  Eigen::VectorXcd gather(std::span<const QubitHandle> handles, std::size_t& rest_qubits) const;

  std::uint64_t seed_;
  std::mt19937_64 rng_;
  std::uint64_t next_handle_ = 1;
  std::uint64_t next_class_ = 1;
  std::map<std::uint64_t, EntClass> classes_;
  std::unordered_map<std::uint64_t, std::uint64_t> where_;
};

}  // namespace aqs
