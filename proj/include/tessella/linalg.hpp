// Copyright 2026 The Tessella Authors.
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

#include "tessella/rational.hpp"

#include <optional>

namespace tessella::linalg {

// Exact elimination routines. Eigen's own decompositions pick pivots by
// magnitude thresholds, which is meaningless over the rationals, so these
// operate on any field-valued Scalar with plain Gaussian elimination.

template <typename Scalar>
Scalar determinant(MatrixX<Scalar> m) {
  const Eigen::Index n = m.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Scalar f = m(r, col) / m(col, col);
      for (Eigen::Index c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

template <typename Scalar>
Eigen::Index rank(MatrixX<Scalar> m) {
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < m.cols() && r < m.rows(); ++col) {
    Eigen::Index pivot = r;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const Scalar f = m(i, col) / m(r, col);
      m.row(i) -= f * m.row(r);
    }
    ++r;
  }
  return r;
}

/// Gauss-Jordan inverse; empty optional when singular.
template <typename Scalar>
std::optional<MatrixX<Scalar>> inverse(const MatrixX<Scalar>& a) {
  const Eigen::Index n = a.rows();
  MatrixX<Scalar> m = a;
  MatrixX<Scalar> inv = MatrixX<Scalar>::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    m.row(pivot).swap(m.row(col));
    inv.row(pivot).swap(inv.row(col));
    const Scalar p = m(col, col);
    m.row(col) /= p;
    inv.row(col) /= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Scalar f = m(r, col);
      m.row(r) -= f * m.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  return inv;
}

/// Column-style Hermite normal form of the integer lattice spanned by the
/// columns of `gens`. The result is square lower-triangular with positive
/// diagonal and entries left of the diagonal reduced into [0, h_ii).
/// Requires the columns to span a full-rank lattice.
IMatrix hermite_normal_form(const IMatrix& gens);

/// Canonical (Hermite-reduced) basis of the rational lattice spanned by the
/// columns of `gens`.
RMatrix hermite_basis(const RMatrix& gens);

/// LLL-reduced basis (delta = 3/4) of the lattice with the given columns.
RMatrix lll_reduce(const RMatrix& basis);

/// Squared Gram-Schmidt lengths of the columns, in order.
std::vector<Rational> gram_schmidt_norms(const RMatrix& basis);

}  // namespace tessella::linalg
