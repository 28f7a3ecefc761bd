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

#include <optional>

namespace tessella::finite {

/// An atom whose coverage count is wrong.
struct CoverageWitness {
  Atom atom;
  std::size_t count;
  bool operator==(const CoverageWitness&) const = default;
};

struct Verdict {
  bool ok = false;
  std::optional<CoverageWitness> witness;
  explicit operator bool() const { return ok; }
};

/// True iff the |G| translates of X are pairwise disjoint and cover M.
Verdict verify_fundamental_domain(const FiniteAction& action, const AtomSet& x);

/// True iff all translates g.F_i, over all g and i, are pairwise disjoint.
Verdict verify_packing(const FiniteAction& action, const std::vector<AtomSet>& family);

/// Lowest-index transversal of the orbits. Throws NotFree when some orbit is
/// shorter than |G|.
AtomSet find_fundamental_domain(const FiniteAction& action);

/// Orbits of the group generated by both actions, ordered by least atom.
std::vector<AtomSet> joint_invariant_partition(const ActionPair& pair);

}  // namespace tessella::finite
