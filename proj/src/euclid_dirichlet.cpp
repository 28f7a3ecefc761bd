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
#include "tessella/euclid/dirichlet.hpp"

#include "tessella/error.hpp"
#include "tessella/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace tessella::euclid {

namespace {

bool lex_less(const RVector& a, const RVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

RVector cross(const RVector& a, const RVector& b) {
  RVector c(3);
  c << a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0);
  return c;
}

// Sorts points counterclockwise in the plane spanned by u and w around the
// origin of their offsets.
void sort_by_angle(std::vector<RVector>& pts, const RVector& origin, const RVector& u,
                   const RVector& w) {
  auto coords = [&](const RVector& p) {
    const RVector d = p - origin;
    return std::make_pair(d.dot(u), d.dot(w));
  };
  auto half = [](const std::pair<Rational, Rational>& c) {
    return c.second > 0 || (c.second == 0 && c.first > 0) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const RVector& a, const RVector& b) {
    const auto ca = coords(a), cb = coords(b);
    const int ha = half(ca), hb = half(cb);
    if (ha != hb) return ha < hb;
    return ca.first * cb.second - ca.second * cb.first > 0;
  });
}

Rational polygon_area(std::vector<RVector> pts) {
  RVector center = RVector::Zero(2);
  for (const auto& p : pts) center += p;
  center /= Rational(static_cast<long>(pts.size()));
  RVector u(2), w(2);
  u << 1, 0;
  w << 0, 1;
  sort_by_angle(pts, center, u, w);
  Rational twice(0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const RVector& a = pts[i];
    const RVector& b = pts[(i + 1) % pts.size()];
    twice += a(0) * b(1) - a(1) * b(0);
  }
  return boost::multiprecision::abs(twice) / 2;
}

}  // namespace

bool ConvexCell::contains(const RVector& x) const {
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (normals[i].dot(x) > offsets[i]) return false;
  return true;
}

Rational ConvexCell::volume() const {
  const Eigen::Index n = dim();
  if (n == 1) return vertices.back()(0) - vertices.front()(0);
  if (n == 2) return polygon_area(vertices);
  RVector center = RVector::Zero(3);
  for (const auto& v : vertices) center += v;
  center /= Rational(static_cast<long>(vertices.size()));
  Rational total(0);
  for (std::size_t f = 0; f < normals.size(); ++f) {
    std::vector<RVector> face;
    for (const auto& v : vertices)
      if (normals[f].dot(v) == offsets[f]) face.push_back(v);
    if (face.size() < 3) continue;
    RVector fc = RVector::Zero(3);
    for (const auto& v : face) fc += v;
    fc /= Rational(static_cast<long>(face.size()));
    const RVector u = face.front() - fc;
    sort_by_angle(face, fc, u, cross(normals[f], u));
    for (std::size_t i = 1; i + 1 < face.size(); ++i) {
      MatrixX<Rational> m(3, 3);
      m.col(0) = face[0] - center;
      m.col(1) = face[i] - center;
      m.col(2) = face[i + 1] - center;
      total += boost::multiprecision::abs(linalg::determinant(m));
    }
  }
  return total / 6;
}

bool ConvexCell::symmetric_about(const RVector& center) const {
  std::vector<RVector> mirrored;
  for (const auto& v : vertices) mirrored.push_back(center * Rational(2) - v);
  std::sort(mirrored.begin(), mirrored.end(), lex_less);
  return mirrored == vertices;
}

std::vector<RVector> voronoi_relevant_vectors(const EucLattice& l) {
  const Eigen::Index n = l.dim();
  const RMatrix b = linalg::lll_reduce(l.basis());
  Rational gs_sum(0);
  for (const Rational& q : linalg::gram_schmidt_norms(b)) gs_sum += q;
  // (2 sum |b*_i|)^2 <= 4 n sum |b*_i|^2.
  const Rational radius_sq = Rational(4 * n) * gs_sum;

  // |c_i| <= |row_i(B^-1)| * radius.
  const RMatrix b_inv = *linalg::inverse(b);
  std::vector<Integer> bound(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double r = std::sqrt(to_double(b_inv.row(i).squaredNorm() * radius_sq));
    bound[i] = Integer(static_cast<long>(std::floor(r)) + 1);
  }

  std::map<std::vector<int>, std::vector<RVector>> by_parity;
  std::map<std::vector<int>, Rational> best;
  IVector c(n);
  std::function<void(Eigen::Index)> walk = [&](Eigen::Index i) {
    if (i == n) {
      if (c.isZero()) return;
      const RVector v = b * to_rational(IMatrix(c));
      const Rational norm = v.squaredNorm();
      if (norm > radius_sq) return;
      std::vector<int> parity(n);
      for (Eigen::Index j = 0; j < n; ++j) parity[j] = static_cast<int>(c(j) % 2 == 0 ? 0 : 1);
      if (std::all_of(parity.begin(), parity.end(), [](int p) { return p == 0; })) return;
      auto it = best.find(parity);
      if (it == best.end() || norm < it->second) {
        best[parity] = norm;
        by_parity[parity] = {v};
      } else if (norm == it->second) {
        by_parity[parity].push_back(v);
      }
      return;
    }
    for (Integer k = -bound[i]; k <= bound[i]; ++k) {
      c(i) = k;
      walk(i + 1);
    }
  };
  walk(0);

  std::vector<RVector> out;
  for (auto& [parity, vs] : by_parity)
    if (vs.size() == 2) out.insert(out.end(), vs.begin(), vs.end());
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

ConvexCell dirichlet_domain(const EucLattice& l, const RVector& x0) {
  const Eigen::Index n = l.dim();
  TESSELLA_REQUIRE(n <= 3, ErrorCode::DimensionTooLarge,
                   "Dirichlet domains are supported up to dimension 3");
  TESSELLA_REQUIRE(x0.size() == n, ErrorCode::InvalidInput, "base point dimension mismatch");
  ConvexCell cell;
  for (const RVector& v : voronoi_relevant_vectors(l)) {
    cell.normals.push_back(v);
    cell.offsets.push_back(v.dot(x0) + v.squaredNorm() / 2);
  }

  // Every n-subset of facets with a unique feasible intersection point.
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, Eigen::Index)> choose = [&](std::size_t from, Eigen::Index k) {
    if (k == n) {
      RMatrix a(n, n);
      RVector rhs(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        a.row(i) = cell.normals[pick[i]].transpose();
        rhs(i) = cell.offsets[pick[i]];
      }
      const auto inv = linalg::inverse(a);
      if (!inv) return;
      const RVector x = *inv * rhs;
      if (cell.contains(x)) cell.vertices.push_back(x);
      return;
    }
    for (std::size_t i = from; i < cell.normals.size(); ++i) {
      pick[k] = i;
      choose(i + 1, k + 1);
    }
  };
  choose(0, 0);
  std::sort(cell.vertices.begin(), cell.vertices.end(), lex_less);
  cell.vertices.erase(std::unique(cell.vertices.begin(), cell.vertices.end()),
                      cell.vertices.end());
  return cell;
}

}  // namespace tessella::euclid
