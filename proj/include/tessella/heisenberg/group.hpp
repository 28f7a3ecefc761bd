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

#include <ostream>

namespace tessella::heisenberg {

/// Point (x1, x2, c) of H(R) = R^2 x R with
/// (x, c)(y, d) = (x + y, c + d + x1 y2 - x2 y1).
template <typename Scalar>
struct HeisPoint {
  Scalar x1{0};
  Scalar x2{0};
  Scalar c{0};

  static HeisPoint identity() { return {}; }
  bool operator==(const HeisPoint&) const = default;
};

/// Lie algebra vector u1 X1 + u2 X2 + u3 X3 with [X1, X2] = 2 X3.
template <typename Scalar>
struct LieVec {
  Scalar u1{0};
  Scalar u2{0};
  Scalar u3{0};

  bool operator==(const LieVec&) const = default;
};

using Point = HeisPoint<Rational>;
using Vec = LieVec<Rational>;

template <typename Scalar>
HeisPoint<Scalar> heis_mul(const HeisPoint<Scalar>& g, const HeisPoint<Scalar>& h) {
  return {g.x1 + h.x1, g.x2 + h.x2, g.c + h.c + g.x1 * h.x2 - g.x2 * h.x1};
}

template <typename Scalar>
HeisPoint<Scalar> operator*(const HeisPoint<Scalar>& g, const HeisPoint<Scalar>& h) {
  return heis_mul(g, h);
}

template <typename Scalar>
HeisPoint<Scalar> heis_inv(const HeisPoint<Scalar>& g) {
  return {-g.x1, -g.x2, -g.c};
}

template <typename Scalar>
LieVec<Scalar> operator+(const LieVec<Scalar>& v, const LieVec<Scalar>& w) {
  return {v.u1 + w.u1, v.u2 + w.u2, v.u3 + w.u3};
}

template <typename Scalar>
LieVec<Scalar> operator*(const Scalar& s, const LieVec<Scalar>& v) {
  return {s * v.u1, s * v.u2, s * v.u3};
}

template <typename Scalar>
LieVec<Scalar> bracket(const LieVec<Scalar>& v, const LieVec<Scalar>& w) {
  return {Scalar(0), Scalar(0), Scalar(2) * (v.u1 * w.u2 - v.u2 * w.u1)};
}

/// exp(u1 X1 + u2 X2 + u3 X3) = (u1, u2, u3 + 2 u1 u2).
template <typename Scalar>
HeisPoint<Scalar> heis_exp(const LieVec<Scalar>& v) {
  return {v.u1, v.u2, v.u3 + Scalar(2) * v.u1 * v.u2};
}

template <typename Scalar>
LieVec<Scalar> heis_log(const HeisPoint<Scalar>& g) {
  return {g.x1, g.x2, g.c - Scalar(2) * g.x1 * g.x2};
}

/// exp(v + w) == exp(v) exp(w) exp([v, w] / 2).
template <typename Scalar>
bool cbh_identity_check(const LieVec<Scalar>& v, const LieVec<Scalar>& w) {
  const LieVec<Scalar> half = Scalar(1) / Scalar(2) * bracket(v, w);
  return heis_exp(v + w) == heis_exp(v) * heis_exp(w) * heis_exp(half);
}

/// Central coordinate of exp(v + w) minus that of exp(v) exp(w) exp([v, w] / 2);
/// the planar coordinates always agree.
template <typename Scalar>
Scalar cbh_defect(const LieVec<Scalar>& v, const LieVec<Scalar>& w) {
  const LieVec<Scalar> half = Scalar(1) / Scalar(2) * bracket(v, w);
  return heis_exp(v + w).c - (heis_exp(v) * heis_exp(w) * heis_exp(half)).c;
}

std::ostream& operator<<(std::ostream& os, const Point& g);
std::ostream& operator<<(std::ostream& os, const Vec& v);

}  // namespace tessella::heisenberg
