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

#include "tessella/finite/group.hpp"
#include "tessella/rational.hpp"

#include <string>
#include <vector>

namespace tessella::finite {

using Atom = std::size_t;
/// Sorted, duplicate-free list of atom indices.
using AtomSet = std::vector<Atom>;
using Permutation = std::vector<Atom>;

/// Normalizes an arbitrary index list into an AtomSet.
AtomSet make_atom_set(std::vector<Atom> atoms);

/// Finite atomic measure space: atom i has strictly positive weight.
class FiniteMeasureSpace {
 public:
  explicit FiniteMeasureSpace(std::vector<Rational> weights);
  static FiniteMeasureSpace uniform(std::size_t atoms);

  std::size_t size() const { return weights_.size(); }
  const Rational& weight(Atom a) const { return weights_[a]; }
  const std::vector<Rational>& weights() const { return weights_; }
  Rational measure(const AtomSet& set) const;

  bool operator==(const FiniteMeasureSpace&) const = default;

 private:
  std::vector<Rational> weights_;
};

enum class Side { Left, Right };

/// A finite group acting on a finite measure space by weight-preserving
/// permutations. perm[g][x] is g.x for a left action and x.g for a right one;
/// right actions are therefore anti-homomorphisms into Sym(M).
class FiniteAction {
 public:
  FiniteAction(FiniteGroup group, FiniteMeasureSpace space, std::vector<Permutation> perm,
               Side side);

  const FiniteGroup& group() const { return group_; }
  const FiniteMeasureSpace& space() const { return space_; }
  const std::vector<Permutation>& permutations() const { return perm_; }
  Side side() const { return side_; }

  Atom apply(Element g, Atom x) const { return perm_[g][x]; }
  AtomSet translate(Element g, const AtomSet& set) const;

  /// Orbit label per atom, labels numbered by increasing least atom.
  std::vector<std::size_t> orbit_labels() const;
  bool is_free() const;

  /// The equivalent left action g -> perm[g^{-1}] (identity for left actions).
  FiniteAction as_left() const;

 private:
  FiniteGroup group_;
  FiniteMeasureSpace space_;
  std::vector<Permutation> perm_;
  Side side_;
};

/// Two actions on the same space that commute atomwise. By convention the
/// first one plays the role of Gamma (left) and the second of Lambda (right).
class ActionPair {
 public:
  ActionPair(FiniteAction left, FiniteAction right);

  const FiniteAction& left() const { return left_; }
  const FiniteAction& right() const { return right_; }
  const FiniteMeasureSpace& space() const { return left_.space(); }

 private:
  FiniteAction left_;
  FiniteAction right_;
};

/// Translation action of Z_n (generated by `step`) on Z_modulus, unit weights.
FiniteAction cyclic_shift_action(std::size_t modulus, std::size_t step, Side side);

}  // namespace tessella::finite
