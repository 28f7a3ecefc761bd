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

#include "tessella/heisenberg/group.hpp"

#include <cstdint>

namespace tessella::heisenberg {

/// Plane map applied to the first two coordinates; the centre is fixed.
Point apply_planar(const RMatrix& a, const Point& g);

/// Measure-preserving automorphism (x, c) -> (A x, c) with det A = 1.
class HeisAut {
 public:
  explicit HeisAut(RMatrix a);

  static HeisAut identity();
  /// (x1, x2, c) -> (p x1, x2 / p, c), p > 0.
  static HeisAut dilation(const Rational& p);
  /// (x1, x2, c) -> (x1 + s x2, x2, c).
  static HeisAut shear_upper(const Rational& s);
  /// (x1, x2, c) -> (x1, t x1 + x2, c).
  static HeisAut shear_lower(const Rational& t);

  const RMatrix& matrix() const { return a_; }
  Point operator()(const Point& g) const { return apply_planar(a_, g); }
  HeisAut compose(const HeisAut& inner) const { return HeisAut(a_ * inner.a_); }

 private:
  RMatrix a_;
};

inline Point aut_apply(const HeisAut& alpha, const Point& g) { return alpha(g); }

/// Checks phi(g h) = phi(g) phi(h) on `trials` seeded random rational pairs,
/// where phi(x, c) = (A x, c). Holds exactly iff det A = 1.
bool aut_is_homomorphism_check(const RMatrix& a, std::uint64_t seed, int trials = 100);

}  // namespace tessella::heisenberg
