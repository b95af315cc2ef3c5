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

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "aqs/core/types.hpp"

namespace aqs {

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

template <typename Scalar>
using Vector2c = Eigen::Matrix<std::complex<Scalar>, 2, 1>;

template <typename Scalar>
using Vector4c = Eigen::Matrix<std::complex<Scalar>, 4, 1>;

template <typename Scalar = double>
Matrix2c<Scalar> pauli_x() {
  Matrix2c<Scalar> m;
  m << Scalar(0), Scalar(1), Scalar(1), Scalar(0);
  return m;
}

template <typename Scalar = double>
Matrix2c<Scalar> pauli_z() {
  Matrix2c<Scalar> m;
  m << Scalar(1), Scalar(0), Scalar(0), Scalar(-1);
  return m;
}

template <typename Scalar = double>
Matrix2c<Scalar> hadamard() {
  const Scalar s = Scalar(1) / std::sqrt(Scalar(2));
  Matrix2c<Scalar> m;
  m << s, s, s, -s;
  return m;
}

template <typename Scalar = double>
std::complex<Scalar> phase_of(const PauliWord& w) {
  switch (w.phase & 3u) {
    case 0: return {Scalar(1), Scalar(0)};
    case 1: return {Scalar(0), Scalar(1)};
    case 2: return {Scalar(-1), Scalar(0)};
    default: return {Scalar(0), Scalar(-1)};
  }
}

/// Dense 2x2 form of a Pauli word: phase * X^x * Z^z.
template <typename Scalar = double>
Matrix2c<Scalar> pauli_matrix(const PauliWord& w) {
  Matrix2c<Scalar> m = Matrix2c<Scalar>::Identity();
  if (w.z) m = pauli_z<Scalar>() * m;
  if (w.x) m = pauli_x<Scalar>() * m;
  return phase_of<Scalar>(w) * m;
}

template <typename Scalar = double>
Vector4c<Scalar> bell_vector(BellKind kind) {
  const Scalar s = Scalar(1) / std::sqrt(Scalar(2));
  Vector4c<Scalar> v = Vector4c<Scalar>::Zero();
  switch (kind) {
    case BellKind::PhiPlus: v(0) = s; v(3) = s; break;
    case BellKind::PhiMinus: v(0) = s; v(3) = -s; break;
    case BellKind::PsiPlus: v(1) = s; v(2) = s; break;
    case BellKind::PsiMinus: v(1) = s; v(2) = -s; break;
  }
  return v;
}

/// Kronecker product of two column vectors; `a` holds the more significant qubits.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, 1> kron(const Eigen::MatrixBase<DerivedA>& a,
                                                                 const Eigen::MatrixBase<DerivedB>& b) {
  Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, 1> out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

}  // namespace aqs
