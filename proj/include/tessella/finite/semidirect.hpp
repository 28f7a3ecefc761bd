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

namespace tessella::finite {

/// alpha[l] is the automorphism alpha(l) of Gamma as a table on element
/// indices. The product Lambda x| Gamma indexes (l, g) as l * |Gamma| + g.
struct SemidirectSpec {
  FiniteGroup lambda;
  FiniteGroup gamma;
  std::vector<Permutation> alpha;
};

/// Group on pairs with (l1, g1)(l2, g2) = (l1 l2, g1 alpha(l1)(g2)).
/// Throws InvalidAlpha when alpha is not a homomorphism into Aut(Gamma).
FiniteGroup semidirect_product(const SemidirectSpec& spec);

inline Element pair_index(const SemidirectSpec& spec, Element l, Element g) {
  return l * spec.gamma.order() + g;
}

/// The restrictions of an action of the semidirect product to 1 x Gamma and
/// Lambda x 1, as left actions of Gamma and Lambda.
FiniteAction restrict_to_gamma(const SemidirectSpec& spec, const FiniteAction& action);
FiniteAction restrict_to_lambda(const SemidirectSpec& spec, const FiniteAction& action);

/// Common fundamental domain of both restrictions, assembled from a transport
/// X -> Y under the full action as D = U (l,1)^{-1} Y_{l,g}.
/// X must be a 1 x Gamma domain, Y a Lambda x 1 domain (InvalidDomain), and
/// m(A∩X) = m(A∩Y) on every invariant block (ConditionFails).
AtomSet semidirect_common_fd(const SemidirectSpec& spec, const FiniteAction& action,
                             const AtomSet& x, const AtomSet& y);

}  // namespace tessella::finite
