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

#include "aqs/core/state_register.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aqs/core/gates.hpp"

namespace aqs {
namespace {

using RowMajorMatrixXcd = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

std::size_t log2_exact(Eigen::Index n) {
  std::size_t k = 0;
  while ((Eigen::Index{1} << k) < n) ++k;
  return k;
}

void normalize_input(Eigen::VectorXcd& v) {
  const double norm = v.norm();
  if (norm == 0.0 || !std::isfinite(norm)) throw Error("degenerate amplitude pair");
  if (std::abs(norm * norm - 1.0) > StateRegister::kInputNormTolerance) v /= norm;
}

}  // namespace

StateRegister::StateRegister(std::uint64_t seed) : seed_(seed), rng_(seed) {}

double StateRegister::next_uniform() { return uniform01(rng_); }

std::uint64_t StateRegister::new_class(EntClass c) {
  const std::uint64_t cid = next_class_++;
  for (std::uint64_t id : c.members) where_[id] = cid;
  classes_.emplace(cid, std::move(c));
  return cid;
}

std::uint64_t StateRegister::class_of(QubitHandle h) const {
  auto it = where_.find(h.id);
  if (it == where_.end()) throw Error("dead qubit handle q" + std::to_string(h.id));
  return it->second;
}

std::size_t StateRegister::position(const EntClass& c, std::uint64_t id) const {
  auto it = std::find(c.members.begin(), c.members.end(), id);
  return static_cast<std::size_t>(it - c.members.begin());
}

QubitHandle StateRegister::alloc_qubit(Complex alpha, Complex beta, Party owner) {
  Eigen::VectorXcd v(2);
  v << alpha, beta;
  normalize_input(v);
  const QubitHandle h{next_handle_++, owner};
  new_class(EntClass{{h.id}, std::move(v)});
  return h;
}

HandleSeq StateRegister::alloc_state(const Eigen::VectorXcd& amps, Party owner) {
  if (amps.size() < 2 || !is_power_of_two(amps.size())) throw Error("state dimension must be a power of two");
  const std::size_t k = log2_exact(amps.size());
  if (k > kMaxClassQubits) throw Error("state too large");
  Eigen::VectorXcd v = amps;
  normalize_input(v);
  HandleSeq out;
  EntClass c;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back({next_handle_++, owner});
    c.members.push_back(out.back().id);
  }
  c.amps = std::move(v);
  new_class(std::move(c));
  return out;
}

std::pair<QubitHandle, QubitHandle> StateRegister::make_bell_pair(BellKind kind, Party first, Party second) {
  HandleSeq hs = alloc_state(bell_vector<double>(kind), first);
  hs[1].owner = second;
  return {hs[0], hs[1]};
}

std::uint64_t StateRegister::merge(std::span<const QubitHandle> handles) {
  std::vector<std::uint64_t> cids;
  for (const auto& h : handles) {
    const std::uint64_t cid = class_of(h);
    if (std::find(cids.begin(), cids.end(), cid) == cids.end()) cids.push_back(cid);
  }
  if (cids.size() == 1) return cids.front();

  EntClass joined;
  joined.amps = Eigen::VectorXcd::Ones(1);
  for (std::uint64_t cid : cids) {
    EntClass& c = classes_.at(cid);
    if (joined.members.size() + c.members.size() > kMaxClassQubits) throw Error("entanglement class too large");
    joined.amps = kron(joined.amps, c.amps);
    joined.members.insert(joined.members.end(), c.members.begin(), c.members.end());
    classes_.erase(cid);
  }
  return new_class(std::move(joined));
}

void StateRegister::apply_in_class(EntClass& c, std::span<const std::size_t> positions, const Eigen::MatrixXcd& u) {
  const std::size_t m = c.members.size();
  const std::size_t k = positions.size();
  const std::size_t sub_dim = std::size_t{1} << k;

  std::vector<std::uint64_t> offsets(sub_dim, 0);
  std::uint64_t target_mask = 0;
  for (std::size_t j = 0; j < k; ++j) target_mask |= std::uint64_t{1} << (m - 1 - positions[j]);
  for (std::size_t t = 0; t < sub_dim; ++t) {
    for (std::size_t j = 0; j < k; ++j) {
      if ((t >> (k - 1 - j)) & 1u) offsets[t] |= std::uint64_t{1} << (m - 1 - positions[j]);
    }
  }

  Eigen::VectorXcd sub(static_cast<Eigen::Index>(sub_dim));
  const std::uint64_t dim = std::uint64_t{1} << m;
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    for (std::size_t t = 0; t < sub_dim; ++t) sub(t) = c.amps(base | offsets[t]);
    const Eigen::VectorXcd out = u * sub;
    for (std::size_t t = 0; t < sub_dim; ++t) c.amps(base | offsets[t]) = out(t);
  }
}

void StateRegister::apply_pauli(QubitHandle h, const PauliWord& word) {
  apply_unitary(h, pauli_matrix<double>(word));
}

void StateRegister::apply_unitary(QubitHandle h, const Eigen::Matrix2cd& u) {
  EntClass& c = classes_.at(class_of(h));
  const std::size_t pos = position(c, h.id);
  apply_in_class(c, std::span<const std::size_t>(&pos, 1), u);
}

void StateRegister::apply_unitary(std::span<const QubitHandle> handles, const Eigen::MatrixXcd& u) {
  const Eigen::Index dim = Eigen::Index{1} << handles.size();
  if (u.rows() != dim || u.cols() != dim) throw Error("unitary dimension mismatch");
  for (std::size_t i = 0; i < handles.size(); ++i) {
    for (std::size_t j = i + 1; j < handles.size(); ++j) {
      if (handles[i] == handles[j]) throw Error("repeated qubit handle");
    }
  }
  EntClass& c = classes_.at(merge(handles));
  std::vector<std::size_t> positions;
  for (const auto& h : handles) positions.push_back(position(c, h.id));
  apply_in_class(c, positions, u);
}

std::size_t StateRegister::project(std::uint64_t cid, std::span<const std::size_t> positions,
                                   const Eigen::MatrixXcd& basis) {
  EntClass& c = classes_.at(cid);
  const std::size_t m = c.members.size();
  const std::size_t k = positions.size();
  const std::size_t rest = m - k;

  std::vector<std::size_t> kept;
  for (std::size_t p = 0; p < m; ++p) {
    if (std::find(positions.begin(), positions.end(), p) == positions.end()) kept.push_back(p);
  }

  const Eigen::Index outcomes = basis.cols();
  Eigen::MatrixXcd rem = Eigen::MatrixXcd::Zero(Eigen::Index{1} << rest, outcomes);
  const std::uint64_t dim = std::uint64_t{1} << m;
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    std::uint64_t t = 0;
    for (std::size_t j = 0; j < k; ++j) t = (t << 1) | ((idx >> (m - 1 - positions[j])) & 1u);
    std::uint64_t r = 0;
    for (std::size_t p : kept) r = (r << 1) | ((idx >> (m - 1 - p)) & 1u);
    const Complex a = c.amps(static_cast<Eigen::Index>(idx));
    if (a == Complex(0.0)) continue;
    for (Eigen::Index j = 0; j < outcomes; ++j) rem(r, j) += std::conj(basis(t, j)) * a;
  }

  Eigen::VectorXd probs(outcomes);
  for (Eigen::Index j = 0; j < outcomes; ++j) probs(j) = rem.col(j).squaredNorm();
  const double draw = next_uniform() * probs.sum();
  Eigen::Index chosen = outcomes - 1;
  double acc = 0.0;
  for (Eigen::Index j = 0; j < outcomes; ++j) {
    acc += probs(j);
    if (draw < acc && probs(j) > 0.0) {
      chosen = j;
      break;
    }
  }
  while (probs(chosen) == 0.0 && chosen > 0) --chosen;

  for (std::size_t p : positions) where_.erase(c.members[p]);
  if (rest == 0) {
    classes_.erase(cid);
    return static_cast<std::size_t>(chosen);
  }
  EntClass shrunk;
  for (std::size_t p : kept) shrunk.members.push_back(c.members[p]);
  shrunk.amps = rem.col(chosen) / std::sqrt(probs(chosen));
  classes_.erase(cid);
  new_class(std::move(shrunk));
  return static_cast<std::size_t>(chosen);
}

BellKind StateRegister::bell_measure(QubitHandle h1, QubitHandle h2) {
  if (h1 == h2) throw Error("bell_measure needs two distinct qubits");
  const QubitHandle pair[] = {h1, h2};
  const std::uint64_t cid = merge(pair);
  const EntClass& c = classes_.at(cid);
  const std::size_t positions[] = {position(c, h1.id), position(c, h2.id)};
  Eigen::MatrixXcd basis(4, 4);
  for (BellKind k : kAllBellKinds) basis.col(static_cast<int>(k)) = bell_vector<double>(k);
  return static_cast<BellKind>(project(cid, positions, basis));
}

int StateRegister::measure_z(QubitHandle h) {
  const std::uint64_t cid = class_of(h);
  const std::size_t pos = position(classes_.at(cid), h.id);
  return static_cast<int>(project(cid, std::span<const std::size_t>(&pos, 1), Eigen::MatrixXcd::Identity(2, 2)));
}

void StateRegister::discard(std::span<const QubitHandle> handles) {
  for (const auto& h : handles) {
    if (is_live(h)) measure_z(h);
  }
}

StateRegister::Duplicate StateRegister::duplicate(std::span<const QubitHandle> handles) {
  std::vector<std::uint64_t> cids;
  for (const auto& h : handles) {
    const std::uint64_t cid = class_of(h);
    if (std::find(cids.begin(), cids.end(), cid) == cids.end()) cids.push_back(cid);
  }
  std::unordered_map<std::uint64_t, std::uint64_t> renamed;
  for (std::uint64_t cid : cids) {
    EntClass copy = classes_.at(cid);
    for (auto& id : copy.members) {
      const std::uint64_t fresh = next_handle_++;
      renamed[id] = fresh;
      id = fresh;
    }
    new_class(std::move(copy));
  }
  Duplicate out;
  for (const auto& h : handles) out.copies.push_back({renamed.at(h.id), h.owner});
  for (const auto& [old_id, fresh] : renamed) {
    if (std::none_of(handles.begin(), handles.end(), [&](const QubitHandle& h) { return h.id == old_id; })) {
      out.environment.push_back({fresh, Party::Channel});
    }
  }
  std::sort(out.environment.begin(), out.environment.end(),
            [](const QubitHandle& a, const QubitHandle& b) { return a.id < b.id; });
  return out;
}

Eigen::VectorXcd StateRegister::gather(std::span<const QubitHandle> handles, std::size_t& rest_qubits) const {
  std::vector<std::uint64_t> cids;
  for (std::size_t i = 0; i < handles.size(); ++i) {
    for (std::size_t j = i + 1; j < handles.size(); ++j) {
      if (handles[i] == handles[j]) throw Error("repeated qubit handle");
    }
    const std::uint64_t cid = class_of(handles[i]);
    if (std::find(cids.begin(), cids.end(), cid) == cids.end()) cids.push_back(cid);
  }

  Eigen::VectorXcd joint = Eigen::VectorXcd::Ones(1);
  std::vector<std::uint64_t> members;
  for (std::uint64_t cid : cids) {
    const EntClass& c = classes_.at(cid);
    if (members.size() + c.members.size() > kMaxClassQubits) throw Error("reduced state too large");
    joint = kron(joint, c.amps);
    members.insert(members.end(), c.members.begin(), c.members.end());
  }

  const std::size_t m = members.size();
  std::vector<std::size_t> perm;  // new position -> old position
  for (const auto& h : handles) {
    perm.push_back(static_cast<std::size_t>(std::find(members.begin(), members.end(), h.id) - members.begin()));
  }
  for (std::size_t p = 0; p < m; ++p) {
    if (std::find(perm.begin(), perm.end(), p) == perm.end()) perm.push_back(p);
  }
  rest_qubits = m - handles.size();

  bool identity = true;
  for (std::size_t q = 0; q < m; ++q) identity = identity && perm[q] == q;
  if (identity) return joint;

  Eigen::VectorXcd out(joint.size());
  const std::uint64_t dim = std::uint64_t{1} << m;
  for (std::uint64_t n = 0; n < dim; ++n) {
    std::uint64_t o = 0;
    for (std::size_t q = 0; q < m; ++q) {
      if ((n >> (m - 1 - q)) & 1u) o |= std::uint64_t{1} << (m - 1 - perm[q]);
    }
    out(static_cast<Eigen::Index>(n)) = joint(static_cast<Eigen::Index>(o));
  }
  return out;
}

Eigen::MatrixXcd StateRegister::reduced_density(std::span<const QubitHandle> handles) const {
  std::size_t rest = 0;
  const Eigen::VectorXcd psi = gather(handles, rest);
  const Eigen::Index rows = Eigen::Index{1} << handles.size();
  const Eigen::Index cols = Eigen::Index{1} << rest;
  Eigen::Map<const RowMajorMatrixXcd> m(psi.data(), rows, cols);
  return m * m.adjoint();
}

double StateRegister::fidelity(std::span<const QubitHandle> handles, const Eigen::VectorXcd& reference) const {
  const Eigen::Index rows = Eigen::Index{1} << handles.size();
  if (handles.empty() || reference.size() != rows) throw Error("fidelity reference dimension mismatch");
  std::size_t rest = 0;
  const Eigen::VectorXcd psi = gather(handles, rest);
  Eigen::Map<const RowMajorMatrixXcd> m(psi.data(), rows, Eigen::Index{1} << rest);
  const double f = (m.adjoint() * reference).squaredNorm() / reference.squaredNorm();
  return std::clamp(f, 0.0, 1.0);
}

double StateRegister::overlap(std::span<const QubitHandle> a, std::span<const QubitHandle> b) const {
  if (a.size() != b.size() || a.empty()) throw Error("overlap needs equal, non-empty sequences");
  const Eigen::MatrixXcd ra = reduced_density(a);
  const Eigen::MatrixXcd rb = reduced_density(b);
  const double tr = (ra.cwiseProduct(rb.transpose())).sum().real();
  return std::clamp(tr, 0.0, 1.0);
}

bool StateRegister::same_class(QubitHandle a, QubitHandle b) const { return class_of(a) == class_of(b); }

const Eigen::VectorXcd& StateRegister::class_vector(QubitHandle h) const { return classes_.at(class_of(h)).amps; }

std::vector<std::uint64_t> StateRegister::class_members(QubitHandle h) const {
  return classes_.at(class_of(h)).members;
}

double StateRegister::max_norm_error() const {
  double worst = 0.0;
  for (const auto& [cid, c] : classes_) worst = std::max(worst, std::abs(c.amps.norm() - 1.0));
  return worst;
}

}  // namespace aqs
