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

/// Region tiling by both lattices; throws CovolumeMismatch when the
/// covolumes differ.
FrameRegion common_fd_commensurable(const EucLattice& l1, const EucLattice& l2);

struct LatticeKEpsilon {
  std::int64_t k = 0;
  Rational eps;
  std::vector<FrameRegion> domains;  // each tiles by L2
  FrameRegion remainder;             // packs by L2, measure eps * covolume(L2)

  /// All pieces together; tiles by L1.
  FrameRegion union_region() const;
};

/// Splits a fundamental domain of L1 into k fundamental domains of L2 and a
/// packing remainder, where covolume(L1) = (k + eps) covolume(L2).
LatticeKEpsilon construct_k_epsilon_lattices(const EucLattice& l1, const EucLattice& l2);

}  // namespace tessella::euclid
