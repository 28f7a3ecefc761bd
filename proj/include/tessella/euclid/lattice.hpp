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

namespace tessella::euclid {

/// Full-rank lattice in Q^n; the columns of the basis generate it.
class EucLattice {
 public:
  explicit EucLattice(RMatrix basis);

  static EucLattice integer(Eigen::Index dim);
  static EucLattice diagonal(const std::vector<Rational>& steps);

  Eigen::Index dim() const { return basis_.rows(); }
  const RMatrix& basis() const { return basis_; }

  /// Hermite-reduced basis; equal lattices have equal canonical bases.
  RMatrix canonical_basis() const;

  /// Coordinates of v in the basis.
  RVector coordinates(const RVector& v) const;
  bool contains(const RVector& v) const;

  bool operator==(const EucLattice& other) const;

 private:
  RMatrix basis_;
  RMatrix inverse_;
};

Rational covolume(const EucLattice& l);

EucLattice lattice_sum(const EucLattice& a, const EucLattice& b);
EucLattice lattice_intersection(const EucLattice& a, const EucLattice& b);

/// [L : sub]; throws NotSublattice when sub is not contained in L.
Integer lattice_index(const EucLattice& sub, const EucLattice& l);

/// Rational lattices of equal dimension are always commensurable; this only
/// checks that the basis change is rational, which exact input guarantees.
bool commensurable(const EucLattice& a, const EucLattice& b);

/// Integer matrix of sub's basis in the coordinates of l.
IMatrix relative_basis(const EucLattice& sub, const EucLattice& l);

/// Coset representatives of Z^n / H Z^n for a lower-triangular Hermite form H:
/// all a with 0 <= a_i < H(i,i), in lexicographic order.
std::vector<IVector> hermite_coset_reps(const IMatrix& h);

/// Reduces a modulo the columns of a lower-triangular Hermite form H into the
/// representative box of hermite_coset_reps.
IVector reduce_mod_hermite(IVector a, const IMatrix& h);

}  // namespace tessella::euclid
