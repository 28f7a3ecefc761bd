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
#include "tessella/euclid/construct.hpp"

#include "tessella/error.hpp"
#include "tessella/finite/transport.hpp"
#include "tessella/linalg.hpp"

#include <map>

namespace tessella::euclid {

namespace {

// Unit cells of S = L1 + L2 indexed by S / (L1 ∩ L2), labelled by their
// L1- and L2-orbits.
struct CellSystem {
  EucLattice sum;
  std::vector<IVector> cells;
  finite::OrbitIncidence incidence;
};

std::size_t label(std::map<std::vector<Integer>, std::size_t>& ids, const IVector& rep) {
  std::vector<Integer> key(rep.data(), rep.data() + rep.size());
  return ids.emplace(std::move(key), ids.size()).first->second;
}

CellSystem cell_system(const EucLattice& l1, const EucLattice& l2) {
  const EucLattice s = lattice_sum(l1, l2);
  const EucLattice delta = lattice_intersection(l1, l2);
  const IMatrix h_delta = linalg::hermite_normal_form(relative_basis(delta, s));
  const IMatrix h1 = linalg::hermite_normal_form(relative_basis(l1, s));
  const IMatrix h2 = linalg::hermite_normal_form(relative_basis(l2, s));
  CellSystem out{s, hermite_coset_reps(h_delta), {}};
  std::map<std::vector<Integer>, std::size_t> left_ids, right_ids;
  for (const IVector& a : out.cells) {
    out.incidence.left_orbit.push_back(label(left_ids, reduce_mod_hermite(a, h1)));
    out.incidence.right_orbit.push_back(label(right_ids, reduce_mod_hermite(a, h2)));
  }
  out.incidence.left_count = left_ids.size();
  out.incidence.right_count = right_ids.size();
  return out;
}

Box unit_cell(const IVector& a) {
  Box b;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    b.lo.emplace_back(a(i));
    b.hi.emplace_back(a(i) + 1);
  }
  return b;
}

void require_post(bool ok, const std::string& what) {
  TESSELLA_REQUIRE(ok, ErrorCode::VerificationFailed, what);
}

}  // namespace

FrameRegion common_fd_commensurable(const EucLattice& l1, const EucLattice& l2) {
  TESSELLA_REQUIRE(l1.dim() == l2.dim(), ErrorCode::InvalidInput, "lattice dimensions differ");
  TESSELLA_REQUIRE(commensurable(l1, l2), ErrorCode::Incommensurable,
                   "lattices are not commensurable");
  TESSELLA_REQUIRE(covolume(l1) == covolume(l2), ErrorCode::CovolumeMismatch,
                   "covolumes differ: " + to_string(covolume(l1)) + " vs " +
                       to_string(covolume(l2)));
  if (l1 == l2) return fundamental_parallelepiped(l1);

  const CellSystem sys = cell_system(l1, l2);
  const auto selected = finite::select_atoms(sys.incidence, {1, 1}, {1, 1});
  require_post(selected.has_value(), "no cell matching between the two orbit systems");
  std::vector<Box> boxes;
  for (std::size_t i = 0; i < sys.cells.size(); ++i)
    if ((*selected)[i]) boxes.push_back(unit_cell(sys.cells[i]));
  FrameRegion out(sys.sum.basis(), std::move(boxes));
  require_post(verify_tiling_exact(out, l1).ok, "common domain does not tile by L1");
  require_post(verify_tiling_exact(out, l2).ok, "common domain does not tile by L2");
  return out;
}

FrameRegion LatticeKEpsilon::union_region() const {
  std::vector<Box> boxes = remainder.boxes();
  for (const auto& d : domains) boxes.insert(boxes.end(), d.boxes().begin(), d.boxes().end());
  return FrameRegion(remainder.frame(), std::move(boxes));
}

LatticeKEpsilon construct_k_epsilon_lattices(const EucLattice& l1, const EucLattice& l2) {
  TESSELLA_REQUIRE(l1.dim() == l2.dim(), ErrorCode::InvalidInput, "lattice dimensions differ");
  TESSELLA_REQUIRE(commensurable(l1, l2), ErrorCode::Incommensurable,
                   "lattices are not commensurable");
  const Rational ratio = covolume(l1) / covolume(l2);
  TESSELLA_REQUIRE(ratio >= 1, ErrorCode::ConditionFails,
                   "covolume ratio " + to_string(ratio) + " is below 1");
  const std::int64_t k = to_int64(floor(ratio));
  const Rational eps = ratio - Rational(k);

  const CellSystem sys = cell_system(l1, l2);
  const auto selected = finite::select_atoms(sys.incidence, {1, 1}, {k, k + 1});
  require_post(selected.has_value(), "no cell selection with the required orbit counts");
  const auto layers =
      finite::layer_by_right_orbit(sys.incidence, *selected, static_cast<std::size_t>(k) + 1);

  auto region = [&](const finite::AtomSet& cells) {
    std::vector<Box> boxes;
    for (auto c : cells) boxes.push_back(unit_cell(sys.cells[c]));
    return FrameRegion(sys.sum.basis(), std::move(boxes));
  };
  LatticeKEpsilon out{k, eps, {}, region(layers.back())};
  for (std::int64_t i = 0; i < k; ++i) out.domains.push_back(region(layers[i]));

  for (const auto& d : out.domains)
    require_post(verify_tiling_exact(d, l2).ok, "F_i does not tile by L2");
  require_post(verify_packing_exact(out.remainder, l2).ok, "F_eps does not pack by L2");
  require_post(out.remainder.measure() == eps * covolume(l2), "m(F_eps) != eps covolume(L2)");
  require_post(verify_tiling_exact(out.union_region(), l1).ok, "union does not tile by L1");
  return out;
}

}  // namespace tessella::euclid
