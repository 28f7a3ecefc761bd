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

#include "tessella/euclid/region.hpp"

namespace tessella::euclid {

struct BoundaryCount {
  std::uint64_t interior = 0;  // translates inside A
  std::uint64_t boundary = 0;  // translates meeting A and its complement
};

/// Counts the translates l + X, l in L, against A. The frames of X and A must
/// differ by a diagonal matrix so that translates stay boxes in A's frame.
BoundaryCount boundary_count(const EucLattice& l, const FrameRegion& x, const FrameRegion& a);

/// Same with X the fundamental parallelepiped of L.
BoundaryCount boundary_count(const EucLattice& l, const FrameRegion& a);

/// Region with every box corner multiplied by t.
FrameRegion dilate(const FrameRegion& a, const Rational& t);

struct BoundaryRow {
  Rational scale;
  BoundaryCount count;
  Rational measure;  // m(t A)
  Rational ratio;    // N_b / m(t A)
};

std::vector<BoundaryRow> boundary_series(const EucLattice& l, const FrameRegion& x,
                                         const FrameRegion& a,
                                         const std::vector<Rational>& scales);

/// Nested sets A in B in C against the translates of X: whenever a translate
/// meets A (resp. B) in positive measure it lies inside B (resp. C).
struct SandwichReport {
  bool nested = false;
  bool absorbing = false;
  Rational ratio;  // m(A) / m(C)
};

SandwichReport sandwich_check(const EucLattice& l, const FrameRegion& x, const FrameRegion& a,
                              const FrameRegion& b, const FrameRegion& c);

}  // namespace tessella::euclid
