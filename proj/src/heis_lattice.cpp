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
#include "tessella/heisenberg/lattice.hpp"

#include "tessella/error.hpp"
#include "tessella/linalg.hpp"

namespace tessella::heisenberg {

bool malcev_condition(const RMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) return false;
  const Rational d = linalg::determinant(a);
  return d != 0 && is_integer(2 * d);
}

HeisLattice::HeisLattice(RMatrix a) : a_(std::move(a)) {
  TESSELLA_REQUIRE(a_.rows() == 2 && a_.cols() == 2, ErrorCode::InvalidInput,
                   "Malcev matrix must be 2x2");
  TESSELLA_REQUIRE(malcev_condition(a_), ErrorCode::InvalidInput,
                   "det A = " + to_string(linalg::determinant(a_)) +
                       " is not a nonzero half-integer");
  det_ = linalg::determinant(a_);
  a_inv_ = *linalg::inverse(a_);
}

HeisLattice HeisLattice::standard() { return HeisLattice(RMatrix::Identity(2, 2)); }

Point HeisLattice::element(const Integer& a, const Integer& b, const Integer& m) const {
  const Rational ra(a), rb(b);
  return {a_(0, 0) * ra + a_(0, 1) * rb, a_(1, 0) * ra + a_(1, 1) * rb,
          Rational(m) + ra * rb * det_};
}

std::array<Rational, 2> HeisLattice::frame_coordinates(const Point& g) const {
  return {a_inv_(0, 0) * g.x1 + a_inv_(0, 1) * g.x2, a_inv_(1, 0) * g.x1 + a_inv_(1, 1) * g.x2};
}

std::optional<std::array<Integer, 3>> HeisLattice::coordinates(const Point& g) const {
  const auto t = frame_coordinates(g);
  if (!is_integer(t[0]) || !is_integer(t[1])) return std::nullopt;
  const Rational m = g.c - t[0] * t[1] * det_;
  if (!is_integer(m)) return std::nullopt;
  return std::array<Integer, 3>{numer(t[0]), numer(t[1]), numer(m)};
}

bool HeisLattice::in_cell(const Point& g) const {
  const auto t = frame_coordinates(g);
  return t[0] >= 0 && t[0] < 1 && t[1] >= 0 && t[1] < 1 && g.c >= 0 && g.c < 1;
}

bool HeisLattice::operator==(const HeisLattice& other) const {
  auto generated_by = [](const HeisLattice& big, const HeisLattice& small) {
    return big.contains(small.element(1, 0, 0)) && big.contains(small.element(0, 1, 0)) &&
           big.contains(small.element(0, 0, 1));
  };
  return generated_by(*this, other) && generated_by(other, *this);
}

Rational lattice_covolume(const HeisLattice& l) { return boost::multiprecision::abs(l.det()); }

HeisLattice aut_image(const HeisAut& alpha, const HeisLattice& l) {
  return HeisLattice(alpha.matrix() * l.matrix());
}

namespace {

struct Split {
  Integer a, b;
  Rational t1, t2;
};

Split split_plane(const Point& g, const HeisLattice& l) {
  const auto t = l.frame_coordinates(g);
  const Integer a = floor(t[0]), b = floor(t[1]);
  return {a, b, t[0] - Rational(a), t[1] - Rational(b)};
}

Reduction finish(const HeisLattice& l, const Split& s, const Rational& central) {
  // central = m + s with m integral and s in [0, 1).
  const Integer m = floor(central);
  const Point gamma = l.element(s.a, s.b, m);
  const auto& a = l.matrix();
  Point omega{a(0, 0) * s.t1 + a(0, 1) * s.t2, a(1, 0) * s.t1 + a(1, 1) * s.t2,
              central - Rational(m)};
  return {gamma, {s.a, s.b, m}, omega};
}

}  // namespace

Reduction reduce_left(const Point& g, const HeisLattice& l) {
  const Split s = split_plane(g, l);
  const Rational ab(s.a * s.b);
  // gamma * omega has centre m + ab det + s + det (a t2 - b t1).
  const Rational central = g.c - ab * l.det() - l.det() * (Rational(s.a) * s.t2 - Rational(s.b) * s.t1);
  Reduction r = finish(l, s, central);
  TESSELLA_REQUIRE(r.gamma * r.omega == g, ErrorCode::VerificationFailed,
                   "left reduction does not reconstruct the point");
  return r;
}

Reduction reduce_right(const Point& g, const HeisLattice& l) {
  const Split s = split_plane(g, l);
  const Rational ab(s.a * s.b);
  // omega * gamma has centre s + m + ab det + det (t1 b - t2 a).
  const Rational central = g.c - ab * l.det() - l.det() * (s.t1 * Rational(s.b) - s.t2 * Rational(s.a));
  Reduction r = finish(l, s, central);
  TESSELLA_REQUIRE(r.omega * r.gamma == g, ErrorCode::VerificationFailed,
                   "right reduction does not reconstruct the point");
  return r;
}

bool malcev_lattice_check(const RMatrix& a) {
  if (!malcev_condition(a)) return false;
  const HeisLattice l(a);
  const std::array<Point, 3> gens = {l.element(1, 0, 0), l.element(0, 1, 0), l.element(0, 0, 1)};
  for (const Point& g : gens)
    for (const Point& h : gens) {
      if (!l.contains(g * h) || !l.contains(g * heis_inv(h))) return false;
      // Group commutator g h g^-1 h^-1.
      if (!l.contains(g * h * heis_inv(g) * heis_inv(h))) return false;
    }
  return true;
}

}  // namespace tessella::heisenberg
