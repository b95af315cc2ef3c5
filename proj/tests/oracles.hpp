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


// Hand-entered reference data for the tests. Nothing here is computed with
// the library under test.

#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "aqs/core/types.hpp"

namespace aqs::testing {

inline constexpr double kRootHalf = 0.70710678118654752440;

/// Bell vectors in |00>, |01>, |10>, |11> order, written out by hand.
inline Eigen::Vector4cd literal_bell(BellKind kind) {
  const double s = kRootHalf;
  Eigen::Vector4cd v;
  switch (kind) {
    case BellKind::PhiPlus: v << s, 0, 0, s; break;
    case BellKind::PhiMinus: v << s, 0, 0, -s; break;
    case BellKind::PsiPlus: v << 0, s, s, 0; break;
    case BellKind::PsiMinus: v << 0, s, -s, 0; break;
  }
  return v;
}

/// One entry of the key/Bell-state relation table: applying X^x Z^z to the
/// first qubit of `initial` yields `sign * result`.
struct TableEntry {
  bool x;
  bool z;
  BellKind initial;
  double sign;
  BellKind result;
};

// Rows "00", "01", "10", "11" read as (x, z); columns phi+, phi-, psi+, psi-.
inline const std::array<TableEntry, 16> kBellKeyTable = {{
    {false, false, BellKind::PhiPlus, +1, BellKind::PhiPlus},
    {false, false, BellKind::PhiMinus, +1, BellKind::PhiMinus},
    {false, false, BellKind::PsiPlus, +1, BellKind::PsiPlus},
    {false, false, BellKind::PsiMinus, +1, BellKind::PsiMinus},
    {false, true, BellKind::PhiPlus, +1, BellKind::PhiMinus},
    {false, true, BellKind::PhiMinus, +1, BellKind::PhiPlus},
    {false, true, BellKind::PsiPlus, +1, BellKind::PsiMinus},
    {false, true, BellKind::PsiMinus, +1, BellKind::PsiPlus},
    {true, false, BellKind::PhiPlus, +1, BellKind::PsiPlus},
    {true, false, BellKind::PhiMinus, -1, BellKind::PsiMinus},
    {true, false, BellKind::PsiPlus, +1, BellKind::PhiPlus},
    {true, false, BellKind::PsiMinus, -1, BellKind::PhiMinus},
    {true, true, BellKind::PhiPlus, -1, BellKind::PsiMinus},
    {true, true, BellKind::PhiMinus, +1, BellKind::PsiPlus},
    {true, true, BellKind::PsiPlus, -1, BellKind::PhiMinus},
    {true, true, BellKind::PsiMinus, +1, BellKind::PhiPlus},
}};

/// Swap-test acceptance probability (1 + Tr(rho sigma)) / 2, computed by
/// running the three-qubit circuit on density matrices.
inline double swap_test_pass_probability(const Eigen::Matrix2cd& rho, const Eigen::Matrix2cd& sigma) {
  const double s = kRootHalf;
  Eigen::Matrix2cd h;
  h << s, s, s, -s;
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  auto kron3 = [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, const Eigen::MatrixXcd& c) {
    Eigen::MatrixXcd ab(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) ab.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    Eigen::MatrixXcd out(ab.rows() * c.rows(), ab.cols() * c.cols());
    for (int i = 0; i < ab.rows(); ++i)
      for (int j = 0; j < ab.cols(); ++j) out.block(i * c.rows(), j * c.cols(), c.rows(), c.cols()) = ab(i, j) * c;
    return out;
  };
  Eigen::Matrix2cd anc = Eigen::Matrix2cd::Zero();
  anc(0, 0) = 1;
  Eigen::MatrixXcd state = kron3(anc, rho, sigma);
  Eigen::MatrixXcd hh = kron3(h, id, id);
  Eigen::MatrixXcd cswap = Eigen::MatrixXcd::Identity(8, 8);
  cswap(5, 5) = cswap(6, 6) = 0;
  cswap(5, 6) = cswap(6, 5) = 1;
  const Eigen::MatrixXcd u = hh * cswap * hh;
  state = u * state * u.adjoint();
  double p0 = 0;
  for (int i = 0; i < 4; ++i) p0 += state(i, i).real();
  return p0;
}

}  // namespace aqs::testing
