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

#include "tessella/finite/action.hpp"

#include <cstdint>
#include <optional>

namespace tessella::finite {

// Orbit-level core shared with the lattice constructions: every atom is an
// edge between its left orbit and its right orbit, and a construction is a
// degree-constrained subgraph of that bipartite multigraph.

struct OrbitIncidence {
  std::vector<std::size_t> left_orbit;   // per atom
  std::vector<std::size_t> right_orbit;  // per atom
  std::size_t left_count = 0;
  std::size_t right_count = 0;
};

struct DegreeBounds {
  std::int64_t lower;
  std::int64_t upper;
};

OrbitIncidence incidence(const ActionPair& pair);

/// Chooses atoms so that each left orbit meets the selection within `left`
/// and each right orbit within `right`. Ties go to the lowest atom index.
std::optional<std::vector<bool>> select_atoms(const OrbitIncidence& inc, DegreeBounds left,
                                              DegreeBounds right);

/// Splits a selection into layers: layer i receives the i-th selected atom
/// (by index) of every right orbit that has more than i selected atoms.
std::vector<AtomSet> layer_by_right_orbit(const OrbitIncidence& inc,
                                          const std::vector<bool>& selected,
                                          std::size_t layers);

enum class ConditionMode { Equality, AtLeast };

struct BlockMeasure {
  AtomSet block;
  Rational in_x;  // m(block ∩ X)
  Rational in_y;  // m(block ∩ Y)
  bool holds = false;
};

struct ConditionReport {
  bool holds = false;
  Rational factor;  // k + eps
  std::vector<BlockMeasure> blocks;
};

/// Tests m(A∩X) = (k+eps) m(A∩Y) (or >= in AtLeast mode) on every
/// joint-invariant block. Any invariant set is a union of blocks and both
/// sides are additive, so this decides the condition for all invariant sets.
/// Throws InvalidDomain unless X and Y are fundamental domains of the left
/// and right actions respectively.
ConditionReport check_condition(const ActionPair& pair, const AtomSet& x, const AtomSet& y,
                                std::int64_t k, const Rational& eps, ConditionMode mode);

/// k fundamental domains of the right action whose family packs by the left
/// action. Throws ConditionFails when m(A∩X) >= k m(A∩Y) fails on some block.
std::vector<AtomSet> construct_packing_fds(const ActionPair& pair, const AtomSet& x,
                                           const AtomSet& y, std::int64_t k);

struct KEpsilonFamily {
  std::vector<AtomSet> domains;  // F_1..F_k, each a right fundamental domain
  AtomSet remainder;             // F_eps, packs by the right action
  AtomSet union_set() const;
};

/// Requires m(A∩X) = (k+eps) m(A∩Y) on every block.
KEpsilonFamily construct_k_epsilon(const ActionPair& pair, const AtomSet& x, const AtomSet& y,
                                   std::int64_t k, const Rational& eps);

/// A common transversal of both orbit partitions.
AtomSet construct_common_fd(const ActionPair& pair, const AtomSet& x, const AtomSet& y);

struct Piece {
  AtomSet atoms;
  Element element;
  bool operator==(const Piece&) const = default;
};

/// Transport plan witnessing E ~ F: the pieces partition `source` and their
/// translates partition `target`.
struct Equidecomposition {
  std::vector<Piece> pieces;
  AtomSet source;
  AtomSet target;
};

std::optional<Equidecomposition> dye_equivalent(const FiniteAction& action, const AtomSet& e,
                                                const AtomSet& f);

bool is_valid_equidecomposition(const FiniteAction& action, const Equidecomposition& plan);

}  // namespace tessella::finite
