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

#include "tessella/heisenberg/automorphism.hpp"

#include <array>

namespace tessella::heisenberg {

/// True iff det A lies in (1/2)Z \ {0}.
bool malcev_condition(const RMatrix& a);

/// Lattice generated by (Y1, 0), (Y2, 0) and (0, 0, 1), where Y_i = A e_i.
/// Its elements are (A n, m + n1 n2 det A) for n in Z^2, m in Z; A = I gives
/// H(Z).
class HeisLattice {
 public:
  explicit HeisLattice(RMatrix a);

  static HeisLattice standard();

  const RMatrix& matrix() const { return a_; }
  const Rational& det() const { return det_; }

  Point element(const Integer& a, const Integer& b, const Integer& m) const;
  /// Coordinates (a, b, m) of a lattice element, if g is one.
  std::optional<std::array<Integer, 3>> coordinates(const Point& g) const;
  bool contains(const Point& g) const { return coordinates(g).has_value(); }

  /// Planar frame coordinates t = A^{-1} x.
  std::array<Rational, 2> frame_coordinates(const Point& g) const;

  /// The half-open cell {(A t, s) : t in [0,1)^2, s in [0,1)}.
  bool in_cell(const Point& g) const;

  /// Same set of points.
  bool operator==(const HeisLattice& other) const;

 private:
  RMatrix a_;
  RMatrix a_inv_;
  Rational det_;
};

Rational lattice_covolume(const HeisLattice& l);

/// alpha applied to every element.
HeisLattice aut_image(const HeisAut& alpha, const HeisLattice& l);

struct Reduction {
  Point gamma;                    // lattice element
  std::array<Integer, 3> coords;  // (a, b, m) of gamma
  Point omega;                    // in the cell
};

/// g = gamma * omega.
Reduction reduce_left(const Point& g, const HeisLattice& l);
/// g = omega * gamma.
Reduction reduce_right(const Point& g, const HeisLattice& l);

/// Checks the determinant condition; when it holds, also builds the lattice
/// and checks that products and commutators of the generators stay inside.
bool malcev_lattice_check(const RMatrix& a);

}  // namespace tessella::heisenberg
