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
#include "tessella/euclid/boundary.hpp"

#include "tessella/error.hpp"
#include "tessella/linalg.hpp"

#include <functional>

namespace tessella::euclid {

namespace {

// Translates of X expressed as boxes in the frame of A.
class TranslateEnumerator {
 public:
  TranslateEnumerator(const EucLattice& l, const FrameRegion& x, const FrameRegion& a)
      : a_(a), n_(l.dim()) {
    TESSELLA_REQUIRE(x.dim() == n_ && a.dim() == n_, ErrorCode::InvalidInput,
                     "lattice and region dimensions differ");
    TESSELLA_REQUIRE(!x.empty() && !a.empty(), ErrorCode::InvalidInput, "empty region");
    RMatrix transition(n_, n_);
    for (Eigen::Index j = 0; j < n_; ++j) transition.col(j) = a.to_frame(x.frame().col(j));
    TESSELLA_REQUIRE(transition.isDiagonal(0), ErrorCode::InvalidInput,
                     "frames of X and A must differ by a diagonal matrix");
    for (const Box& b : x.boxes()) {
      Box mapped = b;
      for (Eigen::Index i = 0; i < n_; ++i) {
        const Rational s = transition(i, i);
        mapped.lo[i] = s > 0 ? b.lo[i] * s : b.hi[i] * s;
        mapped.hi[i] = s > 0 ? b.hi[i] * s : b.lo[i] * s;
      }
      x_boxes_.push_back(std::move(mapped));
    }
    x_measure_ = x.measure();
    for (Eigen::Index j = 0; j < n_; ++j) step_.push_back(a.to_frame(l.basis().col(j)));
  }

  // Calls f(c, shared measure with A) for every translate that can meet A.
  void for_each(const std::function<void(const IVector&, const Rational&)>& f) const {
    const Box xb = bounding(x_boxes_), ab = bounding(a_.boxes());
    // Shift s = T c must lie in the open box (ab.lo - xb.hi, ab.hi - xb.lo).
    RMatrix t(n_, n_);
    for (Eigen::Index j = 0; j < n_; ++j) t.col(j) = step_[j];
    const RMatrix t_inv = *linalg::inverse(t);
    std::vector<Integer> lo(n_), hi(n_);
    for (Eigen::Index i = 0; i < n_; ++i) {
      Rational mid(0), spread(0);
      for (Eigen::Index j = 0; j < n_; ++j) {
        const Rational m = (ab.lo[j] - xb.hi[j] + ab.hi[j] - xb.lo[j]) / 2;
        const Rational h = (ab.hi[j] - xb.lo[j] - ab.lo[j] + xb.hi[j]) / 2;
        mid += t_inv(i, j) * m;
        spread += boost::multiprecision::abs(t_inv(i, j)) * h;
      }
      lo[i] = floor(mid - spread);
      hi[i] = ceil(mid + spread);
    }
    IVector c(n_);
    std::function<void(Eigen::Index)> walk = [&](Eigen::Index i) {
      if (i == n_) {
        f(c, shared(c));
        return;
      }
      for (Integer k = lo[i]; k <= hi[i]; ++k) {
        c(i) = k;
        walk(i + 1);
      }
    };
    walk(0);
  }

  // m((l + X) ∩ A) for l with coordinates c.
  Rational shared(const IVector& c) const {
    RVector shift = RVector::Zero(n_);
    for (Eigen::Index j = 0; j < n_; ++j) shift += step_[j] * Rational(c(j));
    Rational total(0);
    for (const Box& xb : x_boxes_) {
      const Box moved = translate(xb, shift);
      for (const Box& b : a_.boxes())
        if (auto z = intersect(moved, b)) total += z->volume();
    }
    return total * a_.frame_volume();
  }

  const Rational& x_measure() const { return x_measure_; }

 private:
  static Box bounding(const std::vector<Box>& boxes) {
    Box out = boxes.front();
    for (const Box& b : boxes)
      for (std::size_t i = 0; i < b.dim(); ++i) {
        out.lo[i] = std::min(out.lo[i], b.lo[i]);
        out.hi[i] = std::max(out.hi[i], b.hi[i]);
      }
    return out;
  }

  const FrameRegion& a_;
  Eigen::Index n_;
  std::vector<Box> x_boxes_;
  std::vector<RVector> step_;
  Rational x_measure_;
};

void require_fundamental(const EucLattice& l, const FrameRegion& x) {
  TESSELLA_REQUIRE(verify_tiling_exact(x, l).ok, ErrorCode::InvalidDomain,
                   "X is not a fundamental domain of the lattice");
}

BoundaryCount count_unchecked(const EucLattice& l, const FrameRegion& x, const FrameRegion& a) {
  const TranslateEnumerator e(l, x, a);
  BoundaryCount out;
  e.for_each([&](const IVector&, const Rational& shared) {
    if (shared == e.x_measure())
      ++out.interior;
    else if (shared > 0)
      ++out.boundary;
  });
  return out;
}

bool contained(const FrameRegion& inner, const FrameRegion& outer) {
  return intersection_measure(inner, outer) == inner.measure();
}

// Every translate meeting `inner` in positive measure lies inside `outer`.
bool absorbs(const EucLattice& l, const FrameRegion& x, const FrameRegion& inner,
             const FrameRegion& outer) {
  const TranslateEnumerator in(l, x, inner), out(l, x, outer);
  bool ok = true;
  in.for_each([&](const IVector& c, const Rational& m) {
    if (m > 0 && out.shared(c) != out.x_measure()) ok = false;
  });
  return ok;
}

}  // namespace

BoundaryCount boundary_count(const EucLattice& l, const FrameRegion& x, const FrameRegion& a) {
  require_fundamental(l, x);
  return count_unchecked(l, x, a);
}

BoundaryCount boundary_count(const EucLattice& l, const FrameRegion& a) {
  return count_unchecked(l, fundamental_parallelepiped(l), a);
}

FrameRegion dilate(const FrameRegion& a, const Rational& t) {
  TESSELLA_REQUIRE(t > 0, ErrorCode::InvalidInput, "dilation factor must be positive");
  std::vector<Box> boxes;
  for (Box b : a.boxes()) {
    for (std::size_t i = 0; i < b.dim(); ++i) {
      b.lo[i] *= t;
      b.hi[i] *= t;
    }
    boxes.push_back(std::move(b));
  }
  return FrameRegion(a.frame(), std::move(boxes), FrameRegion::Trusted{});
}

std::vector<BoundaryRow> boundary_series(const EucLattice& l, const FrameRegion& x,
                                         const FrameRegion& a,
                                         const std::vector<Rational>& scales) {
  require_fundamental(l, x);
  std::vector<BoundaryRow> out;
  for (const Rational& t : scales) {
    const FrameRegion at = dilate(a, t);
    const BoundaryCount count = count_unchecked(l, x, at);
    const Rational m = at.measure();
    out.push_back({t, count, m, Rational(static_cast<long>(count.boundary)) / m});
  }
  return out;
}

SandwichReport sandwich_check(const EucLattice& l, const FrameRegion& x, const FrameRegion& a,
                              const FrameRegion& b, const FrameRegion& c) {
  require_fundamental(l, x);
  SandwichReport out;
  out.nested = contained(a, b) && contained(b, c);
  out.absorbing = absorbs(l, x, a, b) && absorbs(l, x, b, c);
  out.ratio = a.measure() / c.measure();
  return out;
}

}  // namespace tessella::euclid
