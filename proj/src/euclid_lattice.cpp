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
#include "tessella/euclid/lattice.hpp"

#include "tessella/error.hpp"
#include "tessella/linalg.hpp"

namespace tessella::euclid {

EucLattice::EucLattice(RMatrix basis) : basis_(std::move(basis)) {
  TESSELLA_REQUIRE(basis_.rows() >= 1 && basis_.rows() == basis_.cols(), ErrorCode::InvalidInput,
                   "lattice basis must be a nonempty square matrix");
  auto inv = linalg::inverse(basis_);
  TESSELLA_REQUIRE(inv.has_value(), ErrorCode::InvalidInput, "lattice basis is singular");
  inverse_ = std::move(*inv);
}

EucLattice EucLattice::integer(Eigen::Index dim) {
  return EucLattice(RMatrix::Identity(dim, dim));
}

EucLattice EucLattice::diagonal(const std::vector<Rational>& steps) {
  const auto n = static_cast<Eigen::Index>(steps.size());
  RMatrix b = RMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) b(i, i) = steps[i];
  return EucLattice(std::move(b));
}

RMatrix EucLattice::canonical_basis() const { return linalg::hermite_basis(basis_); }

RVector EucLattice::coordinates(const RVector& v) const { return inverse_ * v; }

bool EucLattice::contains(const RVector& v) const {
  const RVector c = coordinates(v);
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (!is_integer(c(i))) return false;
  return true;
}

bool EucLattice::operator==(const EucLattice& other) const {
  return dim() == other.dim() && canonical_basis() == other.canonical_basis();
}

Rational covolume(const EucLattice& l) {
  return boost::multiprecision::abs(linalg::determinant(l.basis()));
}

namespace {

void require_same_dim(const EucLattice& a, const EucLattice& b) {
  TESSELLA_REQUIRE(a.dim() == b.dim(), ErrorCode::InvalidInput, "lattice dimensions differ");
  TESSELLA_REQUIRE(commensurable(a, b), ErrorCode::Incommensurable,
                   "lattices are not commensurable");
}

RMatrix dual_basis(const RMatrix& b) { return linalg::inverse(b)->transpose(); }

}  // namespace

bool commensurable(const EucLattice& a, const EucLattice& b) { return a.dim() == b.dim(); }

EucLattice lattice_sum(const EucLattice& a, const EucLattice& b) {
  require_same_dim(a, b);
  RMatrix gens(a.dim(), 2 * a.dim());
  gens << a.basis(), b.basis();
  return EucLattice(linalg::hermite_basis(gens));
}

EucLattice lattice_intersection(const EucLattice& a, const EucLattice& b) {
  require_same_dim(a, b);
  // (A ∩ B)* = A* + B*.
  RMatrix gens(a.dim(), 2 * a.dim());
  gens << dual_basis(a.basis()), dual_basis(b.basis());
  const RMatrix dual_sum = linalg::hermite_basis(gens);
  return EucLattice(linalg::hermite_basis(dual_basis(dual_sum)));
}

IMatrix relative_basis(const EucLattice& sub, const EucLattice& l) {
  TESSELLA_REQUIRE(sub.dim() == l.dim(), ErrorCode::InvalidInput, "lattice dimensions differ");
  IMatrix out(sub.dim(), sub.dim());
  for (Eigen::Index j = 0; j < sub.dim(); ++j) {
    const RVector c = l.coordinates(sub.basis().col(j));
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      TESSELLA_REQUIRE(is_integer(c(i)), ErrorCode::NotSublattice,
                       "lattice is not contained in the ambient lattice");
      out(i, j) = numer(c(i));
    }
  }
  return out;
}

Integer lattice_index(const EucLattice& sub, const EucLattice& l) {
  const IMatrix rel = relative_basis(sub, l);
  return numer(boost::multiprecision::abs(linalg::determinant(to_rational(rel))));
}

std::vector<IVector> hermite_coset_reps(const IMatrix& h) {
  const Eigen::Index n = h.rows();
  std::vector<IVector> out;
  IVector a = IVector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i)
    TESSELLA_REQUIRE(h(i, i) > 0, ErrorCode::InvalidInput, "Hermite form needs a positive diagonal");
  while (true) {
    out.push_back(a);
    Eigen::Index i = n - 1;
    while (i >= 0) {
      a(i) += 1;
      if (a(i) < h(i, i)) break;
      a(i) = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

IVector reduce_mod_hermite(IVector a, const IMatrix& h) {
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    const Integer q = floor(Rational(a(i), h(i, i)));
    if (q != 0) a -= h.col(i) * q;
  }
  return a;
}

}  // namespace tessella::euclid
