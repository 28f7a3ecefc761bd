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
#include "tessella/linalg.hpp"

#include "tessella/error.hpp"

#include <utility>

namespace tessella::linalg {

namespace {

// Returns (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0.
std::tuple<Integer, Integer, Integer> extended_gcd(Integer a, Integer b) {
  Integer x0(1), y0(0), x1(0), y1(1);
  while (b != 0) {
    const Integer q = a / b;
    a = a - q * b;
    std::swap(a, b);
    x0 = x0 - q * x1;
    std::swap(x0, x1);
    y0 = y0 - q * y1;
    std::swap(y0, y1);
  }
  if (a < 0) return {Integer(-a), Integer(-x0), Integer(-y0)};
  return {a, x0, y0};
}

Integer floor_div(const Integer& a, const Integer& b) { return floor(Rational(a, b)); }

}  // namespace

IMatrix hermite_normal_form(const IMatrix& gens) {
  const Eigen::Index n = gens.rows();
  const Eigen::Index m = gens.cols();
  TESSELLA_REQUIRE(m >= n, ErrorCode::InvalidInput, "fewer generators than dimensions");
  IMatrix h = gens;
  for (Eigen::Index i = 0; i < n; ++i) {
    // Find a nonzero pivot among columns i.. and move it to column i.
    Eigen::Index pivot = i;
    while (pivot < m && h(i, pivot) == 0) ++pivot;
    TESSELLA_REQUIRE(pivot < m, ErrorCode::InvalidInput, "generators are not full rank");
    if (pivot != i) h.col(pivot).swap(h.col(i));
    for (Eigen::Index j = i + 1; j < m; ++j) {
      if (h(i, j) == 0) continue;
      const Integer a = h(i, i);
      const Integer b = h(i, j);
      auto [g, x, y] = extended_gcd(a, b);
      const IVector ci = h.col(i);
      const IVector cj = h.col(j);
      h.col(i) = ci * x + cj * y;
      h.col(j) = ci * Integer(-b / g) + cj * Integer(a / g);
    }
    if (h(i, i) < 0) h.col(i) = -h.col(i);
    for (Eigen::Index k = 0; k < i; ++k) {
      const Integer q = floor_div(h(i, k), h(i, i));
      if (q != 0) h.col(k) -= h.col(i) * q;
    }
  }
  return h.leftCols(n);
}

RMatrix hermite_basis(const RMatrix& gens) {
  const Integer d = common_denominator(gens);
  IMatrix ints(gens.rows(), gens.cols());
  for (Eigen::Index i = 0; i < gens.rows(); ++i)
    for (Eigen::Index j = 0; j < gens.cols(); ++j) ints(i, j) = numer(gens(i, j) * Rational(d));
  RMatrix basis = to_rational(hermite_normal_form(ints));
  return basis / Rational(d);
}

std::vector<Rational> gram_schmidt_norms(const RMatrix& basis) {
  const Eigen::Index n = basis.cols();
  std::vector<RVector> ortho;
  std::vector<Rational> norms;
  for (Eigen::Index i = 0; i < n; ++i) {
    RVector v = basis.col(i);
    for (Eigen::Index j = 0; j < i; ++j) {
      const Rational mu = basis.col(i).dot(ortho[j]) / norms[j];
      v -= ortho[j] * mu;
    }
    norms.push_back(v.squaredNorm());
    ortho.push_back(std::move(v));
  }
  return norms;
}

RMatrix lll_reduce(const RMatrix& input) {
  RMatrix b = input;
  const Eigen::Index n = b.cols();
  const Rational delta(3, 4);

  auto gram_schmidt = [&](RMatrix& ortho, RMatrix& mu, std::vector<Rational>& norms) {
    ortho = b;
    mu = RMatrix::Zero(n, n);
    norms.assign(n, Rational(0));
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < i; ++j) {
        mu(i, j) = b.col(i).dot(ortho.col(j)) / norms[j];
        ortho.col(i) -= ortho.col(j) * mu(i, j);
      }
      norms[i] = ortho.col(i).squaredNorm();
    }
  };

  RMatrix ortho, mu;
  std::vector<Rational> norms;
  gram_schmidt(ortho, mu, norms);
  Eigen::Index k = 1;
  while (k < n) {
    for (Eigen::Index j = k - 1; j >= 0; --j) {
      const Integer q = floor(mu(k, j) + Rational(1, 2));
      if (q != 0) {
        b.col(k) -= b.col(j) * Rational(q);
        gram_schmidt(ortho, mu, norms);
      }
    }
    if (norms[k] >= (delta - mu(k, k - 1) * mu(k, k - 1)) * norms[k - 1]) {
      ++k;
    } else {
      b.col(k).swap(b.col(k - 1));
      gram_schmidt(ortho, mu, norms);
      k = std::max<Eigen::Index>(k - 1, 1);
    }
  }
  return b;
}

}  // namespace tessella::linalg
