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

#include "tessella/euclid/lattice.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace tessella::euclid {

/// Half-open box prod [lo_i, hi_i).
struct Box {
  std::vector<Rational> lo;
  std::vector<Rational> hi;

  std::size_t dim() const { return lo.size(); }
  Rational volume() const;
  bool contains(const RVector& p) const;
  RVector center() const;
  bool operator==(const Box&) const = default;
};

std::optional<Box> intersect(const Box& a, const Box& b);
Box translate(const Box& b, const RVector& shift);

/// Disjoint union of boxes in the coordinates of an invertible frame F: the
/// point F y belongs to the region iff y lies in one of the boxes.
class FrameRegion {
 public:
  FrameRegion(RMatrix frame, std::vector<Box> boxes);

  /// Skips the pairwise-disjointness check; for boxes that come from a grid.
  struct Trusted {};
  FrameRegion(RMatrix frame, std::vector<Box> boxes, Trusted);

  static FrameRegion unit_box(RMatrix frame);

  Eigen::Index dim() const { return frame_.rows(); }
  const RMatrix& frame() const { return frame_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  bool empty() const { return boxes_.empty(); }

  /// |det F|.
  const Rational& frame_volume() const { return frame_volume_; }
  Rational measure() const;

  RVector to_frame(const RVector& point) const { return frame_inverse_ * point; }
  RVector from_frame(const RVector& y) const { return frame_ * y; }
  bool contains(const RVector& point) const;

 private:
  void validate_shapes() const;

  RMatrix frame_;
  RMatrix frame_inverse_;
  Rational frame_volume_;
  std::vector<Box> boxes_;
};

/// Nonnegative combination of indicator functions over one frame.
class StepFunction {
 public:
  struct Term {
    FrameRegion region;
    Rational coefficient;
  };
  explicit StepFunction(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
};

/// Coverage of the torus R^n / L by the translates of a region. Points are
/// tracked in the region's frame, inside the period box prod [0, period_i),
/// which is a fundamental domain of a diagonal sublattice of L and covers the
/// torus `fold` times.
struct MultiplicityMap {
  RMatrix frame;
  std::vector<Rational> period;
  Integer fold;
  std::map<std::uint64_t, FrameRegion> levels;  // multiplicity -> cells

  /// Torus measure of the points covered exactly m times.
  Rational measure(std::uint64_t m) const;
};

MultiplicityMap region_reduce_mod(const FrameRegion& r, const EucLattice& l);

struct TilingVerdict {
  bool ok = false;
  std::optional<RVector> witness;  // ambient coordinates
  std::uint64_t multiplicity = 0;  // coverage at the witness
  explicit operator bool() const { return ok; }
};

TilingVerdict verify_tiling_exact(const FrameRegion& r, const EucLattice& l);
TilingVerdict verify_packing_exact(const FrameRegion& r, const EucLattice& l);

/// True iff sum over l in L of f(x + l) equals 1 for every x.
bool function_tiling_check(const StepFunction& f, const EucLattice& l);

FrameRegion fundamental_parallelepiped(const EucLattice& l);

/// Exact measure of the intersection of two regions sharing a frame.
Rational intersection_measure(const FrameRegion& a, const FrameRegion& b);

}  // namespace tessella::euclid
