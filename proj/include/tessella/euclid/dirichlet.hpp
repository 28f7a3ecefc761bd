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

namespace tessella::euclid {

/// Bounded polytope {x : normal_i . x <= offset_i} with its vertex list.
struct ConvexCell {
  std::vector<RVector> normals;
  std::vector<Rational> offsets;
  std::vector<RVector> vertices;  // lexicographically sorted

  Eigen::Index dim() const { return vertices.empty() ? 0 : vertices.front().size(); }
  bool contains(const RVector& x) const;
  Rational volume() const;
  /// True iff the vertex set is invariant under x -> 2 center - x.
  bool symmetric_about(const RVector& center) const;
};

/// Voronoi cell of x0 in the orbit x0 + L; dimensions 1 to 3.
ConvexCell dirichlet_domain(const EucLattice& l, const RVector& x0);

/// The lattice vectors whose bisectors carry facets of the Voronoi cell.
std::vector<RVector> voronoi_relevant_vectors(const EucLattice& l);

}  // namespace tessella::euclid
