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
#include "tessella/heisenberg/automorphism.hpp"

#include "tessella/error.hpp"
#include "tessella/linalg.hpp"

#include <random>

namespace tessella::heisenberg {

std::ostream& operator<<(std::ostream& os, const Point& g) {
  return os << '(' << to_string(g.x1) << ", " << to_string(g.x2) << ", " << to_string(g.c)
            << ')';
}

std::ostream& operator<<(std::ostream& os, const Vec& v) {
  return os << '[' << to_string(v.u1) << ", " << to_string(v.u2) << ", " << to_string(v.u3)
            << ']';
}

Point apply_planar(const RMatrix& a, const Point& g) {
  TESSELLA_REQUIRE(a.rows() == 2 && a.cols() == 2, ErrorCode::InvalidInput,
                   "automorphism matrix must be 2x2");
  return {a(0, 0) * g.x1 + a(0, 1) * g.x2, a(1, 0) * g.x1 + a(1, 1) * g.x2, g.c};
}

HeisAut::HeisAut(RMatrix a) : a_(std::move(a)) {
  TESSELLA_REQUIRE(a_.rows() == 2 && a_.cols() == 2, ErrorCode::InvalidInput,
                   "automorphism matrix must be 2x2");
  TESSELLA_REQUIRE(linalg::determinant(a_) == 1, ErrorCode::NotMeasurePreserving,
                   "det A = " + to_string(linalg::determinant(a_)) + ", expected 1");
}

HeisAut HeisAut::identity() { return HeisAut(RMatrix::Identity(2, 2)); }

HeisAut HeisAut::dilation(const Rational& p) {
  TESSELLA_REQUIRE(p > 0, ErrorCode::InvalidInput, "dilation parameter must be positive");
  RMatrix a(2, 2);
  a << p, 0, 0, 1 / p;
  return HeisAut(std::move(a));
}

HeisAut HeisAut::shear_upper(const Rational& s) {
  RMatrix a(2, 2);
  a << 1, s, 0, 1;
  return HeisAut(std::move(a));
}

HeisAut HeisAut::shear_lower(const Rational& t) {
  RMatrix a(2, 2);
  a << 1, 0, t, 1;
  return HeisAut(std::move(a));
}

bool aut_is_homomorphism_check(const RMatrix& a, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  for (int i = 0; i < trials; ++i) {
    const Point g{draw(), draw(), draw()}, h{draw(), draw(), draw()};
    if (apply_planar(a, g * h) != apply_planar(a, g) * apply_planar(a, h)) return false;
  }
  return true;
}

}  // namespace tessella::heisenberg
