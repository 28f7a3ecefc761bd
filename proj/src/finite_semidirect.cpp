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
#include "tessella/finite/semidirect.hpp"

#include "tessella/error.hpp"
#include "tessella/finite/domains.hpp"
#include "tessella/finite/transport.hpp"

#include <map>

namespace tessella::finite {

FiniteGroup semidirect_product(const SemidirectSpec& spec) {
  const FiniteGroup& lam = spec.lambda;
  const FiniteGroup& gam = spec.gamma;
  const std::size_t nl = lam.order();
  const std::size_t ng = gam.order();
  TESSELLA_REQUIRE(spec.alpha.size() == nl, ErrorCode::InvalidAlpha,
                   "alpha must list one automorphism per Lambda element");
  for (Element l = 0; l < nl; ++l) {
    const Permutation& a = spec.alpha[l];
    TESSELLA_REQUIRE(a.size() == ng, ErrorCode::InvalidAlpha, "alpha(l) has wrong length");
    std::vector<bool> seen(ng, false);
    for (Element g : a) {
      TESSELLA_REQUIRE(g < ng && !seen[g], ErrorCode::InvalidAlpha, "alpha(l) is not a bijection");
      seen[g] = true;
    }
    for (Element g1 = 0; g1 < ng; ++g1)
      for (Element g2 = 0; g2 < ng; ++g2)
        TESSELLA_REQUIRE(a[gam.mul(g1, g2)] == gam.mul(a[g1], a[g2]), ErrorCode::InvalidAlpha,
                         "alpha(" + std::to_string(l) + ") is not an automorphism");
  }
  for (Element g = 0; g < ng; ++g)
    TESSELLA_REQUIRE(spec.alpha[lam.identity()][g] == g, ErrorCode::InvalidAlpha,
                     "alpha(1) must be the identity");
  for (Element l1 = 0; l1 < nl; ++l1)
    for (Element l2 = 0; l2 < nl; ++l2)
      for (Element g = 0; g < ng; ++g)
        TESSELLA_REQUIRE(spec.alpha[lam.mul(l1, l2)][g] == spec.alpha[l1][spec.alpha[l2][g]],
                         ErrorCode::InvalidAlpha, "alpha is not a homomorphism");

  const std::size_t n = nl * ng;
  CayleyTable table(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (Element l1 = 0; l1 < nl; ++l1)
    for (Element g1 = 0; g1 < ng; ++g1) {
      const Element a = pair_index(spec, l1, g1);
      labels[a] = "(" + lam.labels()[l1] + "," + gam.labels()[g1] + ")";
      for (Element l2 = 0; l2 < nl; ++l2)
        for (Element g2 = 0; g2 < ng; ++g2)
          table[a][pair_index(spec, l2, g2)] =
              pair_index(spec, lam.mul(l1, l2), gam.mul(g1, spec.alpha[l1][g2]));
    }
  if (nl == 1) labels = gam.labels();
  return FiniteGroup(std::move(table), pair_index(spec, lam.identity(), gam.identity()),
                     std::move(labels));
}

namespace {

void require_semidirect_action(const SemidirectSpec& spec, const FiniteAction& action) {
  TESSELLA_REQUIRE(action.side() == Side::Left, ErrorCode::InvalidInput,
                   "semidirect product action must be given as a left action");
  TESSELLA_REQUIRE(action.group().order() == spec.lambda.order() * spec.gamma.order(),
                   ErrorCode::InvalidInput, "action group is not the semidirect product");
}

}  // namespace

FiniteAction restrict_to_gamma(const SemidirectSpec& spec, const FiniteAction& action) {
  require_semidirect_action(spec, action);
  std::vector<Permutation> perm;
  for (Element g = 0; g < spec.gamma.order(); ++g)
    perm.push_back(action.permutations()[pair_index(spec, spec.lambda.identity(), g)]);
  return FiniteAction(spec.gamma, action.space(), std::move(perm), Side::Left);
}

FiniteAction restrict_to_lambda(const SemidirectSpec& spec, const FiniteAction& action) {
  require_semidirect_action(spec, action);
  std::vector<Permutation> perm;
  for (Element l = 0; l < spec.lambda.order(); ++l)
    perm.push_back(action.permutations()[pair_index(spec, l, spec.gamma.identity())]);
  return FiniteAction(spec.lambda, action.space(), std::move(perm), Side::Left);
}

AtomSet semidirect_common_fd(const SemidirectSpec& spec, const FiniteAction& action,
                             const AtomSet& x, const AtomSet& y) {
  const FiniteAction gamma_part = restrict_to_gamma(spec, action);
  const FiniteAction lambda_part = restrict_to_lambda(spec, action);
  TESSELLA_REQUIRE(verify_fundamental_domain(gamma_part, x).ok, ErrorCode::InvalidDomain,
                   "X is not a fundamental domain of 1 x Gamma");
  TESSELLA_REQUIRE(verify_fundamental_domain(lambda_part, y).ok, ErrorCode::InvalidDomain,
                   "Y is not a fundamental domain of Lambda x 1");

  // Invariant sets of the full action are unions of its orbits.
  const auto labels = action.orbit_labels();
  std::map<std::size_t, Rational> balance;
  for (Atom a : x) balance[labels[a]] += action.space().weight(a);
  for (Atom a : y) balance[labels[a]] -= action.space().weight(a);
  for (const auto& [orbit, diff] : balance)
    TESSELLA_REQUIRE(diff == 0, ErrorCode::ConditionFails,
                     "m(A∩X) != m(A∩Y) on the invariant orbit " + std::to_string(orbit));

  // X_{l,g} = piece moved by (l,g); Y_{l,g} = its image.
  const auto plan = dye_equivalent(action, x, y);
  TESSELLA_REQUIRE(plan.has_value(), ErrorCode::VerificationFailed,
                   "no transport X -> Y although orbit measures agree");
  std::vector<Atom> d;
  for (const auto& piece : plan->pieces) {
    const Element l = piece.element / spec.gamma.order();
    const Element back = pair_index(spec, spec.lambda.inverse(l), spec.gamma.identity());
    for (Atom a : piece.atoms) d.push_back(action.apply(back, action.apply(piece.element, a)));
  }
  AtomSet out = make_atom_set(std::move(d));
  TESSELLA_REQUIRE(verify_fundamental_domain(gamma_part, out).ok &&
                       verify_fundamental_domain(lambda_part, out).ok,
                   ErrorCode::VerificationFailed, "assembled D failed verification");
  return out;
}

}  // namespace tessella::finite
