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
#include "support/finite_instances.hpp"
#include "tessella/error.hpp"
#include "tessella/finite/domains.hpp"
#include "tessella/finite/flow.hpp"
#include "tessella/finite/oracle.hpp"
#include "tessella/finite/semidirect.hpp"
#include "tessella/finite/transport.hpp"

#include <gtest/gtest.h>

using namespace tessella;
using namespace tessella::finite;

namespace {

FiniteAction shift(std::size_t modulus, std::size_t step, Side side = Side::Left) {
  return cyclic_shift_action(modulus, step, side);
}

// Z2 = <+3> on the left, Z3 = <+2> on the right, both on Z6.
ActionPair z6_pair() { return ActionPair(shift(6, 3), shift(6, 2, Side::Right)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST(FiniteGroup, RejectsNonGroups) {
  EXPECT_THROW(FiniteGroup({{0, 1}, {1, 1}}, 0), Error);
  EXPECT_THROW(FiniteGroup({{0, 1}, {1, 0}}, 1), Error);
  EXPECT_NO_THROW(fixtures::dihedral(4));
}

TEST(FiniteAction, RejectsBrokenActions) {
  const auto z2 = FiniteGroup::cyclic(2);
  EXPECT_THROW(FiniteAction(z2, FiniteMeasureSpace::uniform(2), {{0, 1}, {0, 0}}, Side::Left),
               Error);
  EXPECT_THROW(FiniteAction(z2, FiniteMeasureSpace({Rational(1), Rational(2)}), {{0, 1}, {1, 0}},
                            Side::Left),
               Error)
      << "swap of unequal weights is not measure preserving";
  EXPECT_THROW(FiniteMeasureSpace({Rational(0)}), Error);
  // <+1> on Z3 and the reflection x -> -x do not commute.
  std::vector<Permutation> refl = {{0, 1, 2}, {0, 2, 1}};
  EXPECT_THROW(ActionPair(shift(3, 1),
                          FiniteAction(z2, FiniteMeasureSpace::uniform(3), refl, Side::Right)),
               Error);
}

TEST(FundamentalDomain, VerifyExamples) {
  const auto a = shift(6, 3);
  EXPECT_TRUE(verify_fundamental_domain(a, {0, 1, 2}).ok);
  const auto bad = verify_fundamental_domain(a, {0, 3});
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.witness);
  EXPECT_EQ(*bad.witness, (CoverageWitness{0, 2}));

  const FiniteAction trivial(FiniteGroup::trivial(), FiniteMeasureSpace::uniform(4),
                             {{0, 1, 2, 3}}, Side::Left);
  EXPECT_TRUE(verify_fundamental_domain(trivial, {0, 1, 2, 3}).ok);
}

TEST(FundamentalDomain, PackingExamples) {
  EXPECT_TRUE(verify_packing(shift(6, 3), {{0}, {1}}).ok);
  EXPECT_FALSE(verify_packing(shift(6, 3), {{1, 2}, {1, 2}}).ok);
  const auto v = verify_packing(shift(6, 2), {{0, 2}});
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.witness->count, 2u);
}

TEST(FundamentalDomain, FindTransversal) {
  EXPECT_EQ(find_fundamental_domain(shift(6, 3)), (AtomSet{0, 1, 2}));
  const FiniteAction trivial(FiniteGroup::trivial(), FiniteMeasureSpace::uniform(2), {{0, 1}},
                             Side::Left);
  EXPECT_EQ(find_fundamental_domain(trivial), (AtomSet{0, 1}));
  // Z2 swapping atoms 0 and 1 while fixing 2.
  const FiniteAction fixed(FiniteGroup::cyclic(2), FiniteMeasureSpace::uniform(3),
                           {{0, 1, 2}, {1, 0, 2}}, Side::Left);
  EXPECT_EQ(code_of([&] { find_fundamental_domain(fixed); }), ErrorCode::NotFree);
}

TEST(FundamentalDomain, JointPartition) {
  EXPECT_EQ(joint_invariant_partition(z6_pair()), (std::vector<AtomSet>{{0, 1, 2, 3, 4, 5}}));

  const FiniteAction t3(FiniteGroup::trivial(), FiniteMeasureSpace::uniform(3), {{0, 1, 2}},
                        Side::Left);
  const FiniteAction t3r(FiniteGroup::trivial(), FiniteMeasureSpace::uniform(3), {{0, 1, 2}},
                         Side::Right);
  EXPECT_EQ(joint_invariant_partition(ActionPair(t3, t3r)),
            (std::vector<AtomSet>{{0}, {1}, {2}}));

  const FiniteAction swaps(FiniteGroup::cyclic(2), FiniteMeasureSpace::uniform(4),
                           {{0, 1, 2, 3}, {1, 0, 3, 2}}, Side::Left);
  const FiniteAction id4(FiniteGroup::trivial(), FiniteMeasureSpace::uniform(4), {{0, 1, 2, 3}},
                         Side::Right);
  EXPECT_EQ(joint_invariant_partition(ActionPair(swaps, id4)),
            (std::vector<AtomSet>{{0, 1}, {2, 3}}));
}

TEST(Condition, Examples) {
  const auto pair = z6_pair();
  const auto eq = check_condition(pair, {0, 1, 2}, {0, 1}, 1, Rational(1, 2),
                                  ConditionMode::Equality);
  EXPECT_TRUE(eq.holds);
  ASSERT_EQ(eq.blocks.size(), 1u);
  EXPECT_EQ(eq.blocks[0].in_x, 3);
  EXPECT_EQ(eq.blocks[0].in_y, 2);

  const ActionPair same(shift(6, 3), shift(6, 3, Side::Right));
  EXPECT_TRUE(check_condition(same, {0, 1, 2}, {0, 1, 2}, 1, Rational(0), ConditionMode::Equality)
                  .holds);

  EXPECT_FALSE(
      check_condition(pair, {0, 1, 2}, {0, 1}, 2, Rational(0), ConditionMode::AtLeast).holds);
  EXPECT_EQ(code_of([&] {
              check_condition(pair, {0, 3}, {0, 1}, 1, Rational(0), ConditionMode::AtLeast);
            }),
            ErrorCode::InvalidDomain);
  EXPECT_THROW(check_condition(pair, {0, 1, 2}, {0, 1}, 1, Rational(1), ConditionMode::AtLeast),
               Error);
}

TEST(Construct, PackingFamilies) {
  const auto pair = z6_pair();
  const auto fam = construct_packing_fds(pair, {0, 1, 2}, {0, 1}, 1);
  ASSERT_EQ(fam.size(), 1u);
  EXPECT_EQ(fam[0], (AtomSet{0, 1}));

  // Gamma trivial: any right fundamental domain, left packing is vacuous.
  const FiniteAction t6(FiniteGroup::trivial(), FiniteMeasureSpace::uniform(6),
                        {{0, 1, 2, 3, 4, 5}}, Side::Left);
  const ActionPair triv(t6, shift(6, 2, Side::Right));
  const auto f = construct_packing_fds(triv, {0, 1, 2, 3, 4, 5}, {0, 1}, 1);
  EXPECT_TRUE(verify_fundamental_domain(triv.right(), f[0]).ok);

  // m(X)/m(Y) = 3/2, so k = 2 is impossible.
  EXPECT_EQ(code_of([&] { construct_packing_fds(pair, {0, 1, 2}, {0, 1}, 2); }),
            ErrorCode::ConditionFails);
}

TEST(Construct, KEpsilonOnZ6) {
  const auto fam = construct_k_epsilon(z6_pair(), {0, 1, 2}, {0, 1}, 1, Rational(1, 2));
  ASSERT_EQ(fam.domains.size(), 1u);
  EXPECT_EQ(fam.domains[0], (AtomSet{0, 1}));
  EXPECT_EQ(fam.remainder, (AtomSet{2}));
  EXPECT_TRUE(verify_fundamental_domain(z6_pair().left(), fam.union_set()).ok);
  EXPECT_EQ(z6_pair().space().measure(fam.remainder), Rational(1, 2) * 2);
}

TEST(Construct, KEpsilonDegenerateCases) {
  const ActionPair same(shift(6, 3), shift(6, 3, Side::Right));
  const auto zero = construct_k_epsilon(same, {0, 1, 2}, {0, 1, 2}, 1, Rational(0));
  EXPECT_TRUE(zero.remainder.empty());
  EXPECT_EQ(zero.domains, construct_packing_fds(same, {0, 1, 2}, {0, 1, 2}, 1));

  // Z2 = <+2> left, Z4 = <+1> right on Z4: ratio 2, so k = 2 and eps = 0.
  const ActionPair p(shift(4, 2), shift(4, 1, Side::Right));
  const auto two = construct_k_epsilon(p, {0, 1}, {0}, 2, Rational(0));
  ASSERT_EQ(two.domains.size(), 2u);
  EXPECT_EQ(two.domains[0], (AtomSet{0}));
  EXPECT_EQ(two.domains[1], (AtomSet{1}));
  EXPECT_TRUE(two.remainder.empty());
  EXPECT_EQ(code_of([&] { construct_k_epsilon(p, {0, 1}, {0}, 1, Rational(1, 2)); }),
            ErrorCode::ConditionFails);
}

TEST(Construct, CommonFundamentalDomain) {
  const ActionPair same(shift(6, 3), shift(6, 3, Side::Right));
  EXPECT_EQ(construct_common_fd(same, {0, 1, 2}, {0, 1, 2}), (AtomSet{0, 1, 2}));

  // <+3> against the involution (0 2)(1 4)(3 5), which commutes with it.
  const FiniteAction inv(FiniteGroup::cyclic(2), FiniteMeasureSpace::uniform(6),
                         {{0, 1, 2, 3, 4, 5}, {2, 4, 0, 5, 1, 3}}, Side::Right);
  const ActionPair p(shift(6, 3), inv);
  EXPECT_TRUE(brute_force_common_fd_exists(p));
  const auto d = construct_common_fd(p, {0, 1, 2}, find_fundamental_domain(inv));
  EXPECT_EQ(d.size(), 3u);
  EXPECT_TRUE(verify_fundamental_domain(p.left(), d).ok);
  EXPECT_TRUE(verify_fundamental_domain(p.right(), d).ok);

  EXPECT_EQ(code_of([&] { construct_common_fd(z6_pair(), {0, 1, 2}, {0, 1}); }),
            ErrorCode::ConditionFails);
}

TEST(Dye, TransportPlans) {
  const auto a = shift(6, 3);
  const auto same = dye_equivalent(a, {0, 4}, {0, 4});
  ASSERT_TRUE(same);
  ASSERT_EQ(same->pieces.size(), 1u);
  EXPECT_EQ(same->pieces[0], (Piece{{0, 4}, 0}));

  const auto move = dye_equivalent(a, {0}, {3});
  ASSERT_TRUE(move);
  EXPECT_EQ(move->pieces, (std::vector<Piece>{{{0}, 1}}));
  EXPECT_TRUE(is_valid_equidecomposition(a, *move));

  EXPECT_FALSE(dye_equivalent(a, {0}, {1}));
}

TEST(Dye, InvalidPlansAreRejected) {
  const auto a = shift(6, 3);
  EXPECT_FALSE(is_valid_equidecomposition(a, {{{{0}, 1}, {{0}, 0}}, {0}, {0, 3}}));
  EXPECT_FALSE(is_valid_equidecomposition(a, {{{{0}, 0}}, {0}, {3}}));
}

TEST(Semidirect, TrivialAlphaIsDirectProduct) {
  const auto z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
  SemidirectSpec spec{z2, z3, {{0, 1, 2}, {0, 1, 2}}};
  EXPECT_EQ(semidirect_product(spec).table(), FiniteGroup::direct_product(z2, z3).table());
}

TEST(Semidirect, InversionGivesDihedral) {
  SemidirectSpec spec{FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), {{0, 1, 2}, {0, 2, 1}}};
  const auto g = semidirect_product(spec);
  EXPECT_EQ(g.table(), fixtures::dihedral(3).table());
  // (l, g)^{-1} = (l^{-1}, alpha(l^{-1}) g^{-1})
  for (Element l = 0; l < 2; ++l)
    for (Element x = 0; x < 3; ++x) {
      const Element li = spec.lambda.inverse(l);
      EXPECT_EQ(g.inverse(pair_index(spec, l, x)),
                pair_index(spec, li, spec.alpha[li][spec.gamma.inverse(x)]));
    }
}

TEST(Semidirect, TrivialLambdaReturnsGamma) {
  const auto z4 = FiniteGroup::cyclic(4);
  EXPECT_EQ(semidirect_product({FiniteGroup::trivial(), z4, {{0, 1, 2, 3}}}), z4);
}

TEST(Semidirect, RejectsBadAlpha) {
  SemidirectSpec not_auto{FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), {{0, 1, 2}, {1, 2, 0}}};
  EXPECT_EQ(code_of([&] { semidirect_product(not_auto); }), ErrorCode::InvalidAlpha);
  // Z3 -> Aut(Z3) with the generator acting by inversion is not a homomorphism.
  SemidirectSpec not_hom{FiniteGroup::cyclic(3), FiniteGroup::cyclic(3),
                         {{0, 1, 2}, {0, 2, 1}, {0, 2, 1}}};
  EXPECT_EQ(code_of([&] { semidirect_product(not_hom); }), ErrorCode::InvalidAlpha);
}

namespace {

FiniteAction regular_action(const FiniteGroup& g) {
  std::vector<Permutation> perm(g.order(), Permutation(g.order()));
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) perm[a][b] = g.mul(a, b);
  return FiniteAction(g, FiniteMeasureSpace::uniform(g.order()), std::move(perm), Side::Left);
}

}  // namespace

TEST(Semidirect, CommonDomainMatchesCommutingConstruction) {
  const auto z2 = FiniteGroup::cyclic(2);
  SemidirectSpec spec{z2, z2, {{0, 1}, {0, 1}}};
  const auto g = semidirect_product(spec);
  // Lambda x Gamma acting on two copies of itself.
  const auto reg = regular_action(g);
  std::vector<Permutation> perm(4, Permutation(8));
  for (Element e = 0; e < 4; ++e)
    for (Atom x = 0; x < 8; ++x) perm[e][x] = (x / 4) * 4 + reg.apply(e, x % 4);
  const FiniteAction action(g, FiniteMeasureSpace::uniform(8), perm, Side::Left);
  const auto gam = restrict_to_gamma(spec, action);
  const auto lam = restrict_to_lambda(spec, action);
  const AtomSet x = find_fundamental_domain(gam);
  const AtomSet y = find_fundamental_domain(lam);
  const AtomSet d = semidirect_common_fd(spec, action, x, y);

  const FiniteAction lam_right(lam.group(), lam.space(), lam.permutations(), Side::Right);
  const ActionPair pair(gam, lam_right);
  const AtomSet c = construct_common_fd(pair, x, y);
  EXPECT_EQ(d, c);
  EXPECT_TRUE(verify_fundamental_domain(gam, d).ok);
  EXPECT_TRUE(verify_fundamental_domain(lam, d).ok);
}

TEST(Semidirect, NonCommutingProductOfEqualOrders) {
  // Z4 x| Z4 with alpha(l) = multiplication by (-1)^l, acting regularly.
  const auto z4 = FiniteGroup::cyclic(4);
  SemidirectSpec spec{z4, z4, {{0, 1, 2, 3}, {0, 3, 2, 1}, {0, 1, 2, 3}, {0, 3, 2, 1}}};
  const auto g = semidirect_product(spec);
  const auto action = regular_action(g);
  const auto gam = restrict_to_gamma(spec, action);
  const auto lam = restrict_to_lambda(spec, action);
  const AtomSet d =
      semidirect_common_fd(spec, action, find_fundamental_domain(gam), find_fundamental_domain(lam));
  EXPECT_TRUE(verify_fundamental_domain(gam, d).ok);
  EXPECT_TRUE(verify_fundamental_domain(lam, d).ok);

  // Any transversals work, not just the lowest-index ones.
  const AtomSet x2 = {pair_index(spec, 0, 2), pair_index(spec, 1, 1), pair_index(spec, 2, 3),
                      pair_index(spec, 3, 0)};
  const AtomSet y2 = {pair_index(spec, 3, 0), pair_index(spec, 1, 1), pair_index(spec, 0, 2),
                      pair_index(spec, 2, 1)};
  const AtomSet d2 = semidirect_common_fd(spec, action, make_atom_set(x2), make_atom_set(y2));
  EXPECT_TRUE(verify_fundamental_domain(gam, d2).ok);
  EXPECT_TRUE(verify_fundamental_domain(lam, d2).ok);
}

TEST(Semidirect, DihedralRegularActionHasNoCommonDomain) {
  // |Gamma| = 3 and |Lambda| = 2: transversals have 2 and 3 atoms.
  SemidirectSpec spec{FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), {{0, 1, 2}, {0, 2, 1}}};
  const auto action = regular_action(semidirect_product(spec));
  const auto x = find_fundamental_domain(restrict_to_gamma(spec, action));
  const auto y = find_fundamental_domain(restrict_to_lambda(spec, action));
  EXPECT_EQ(code_of([&] { semidirect_common_fd(spec, action, x, y); }),
            ErrorCode::ConditionFails);
}

TEST(Semidirect, TrivialLambda) {
  SemidirectSpec both{FiniteGroup::trivial(), FiniteGroup::trivial(), {{0}}};
  const FiniteAction id(semidirect_product(both), FiniteMeasureSpace::uniform(3), {{0, 1, 2}},
                        Side::Left);
  EXPECT_EQ(semidirect_common_fd(both, id, {0, 1, 2}, {0, 1, 2}), (AtomSet{0, 1, 2}));

  // A nontrivial free Gamma with trivial Lambda can never match m(Y) = m(M).
  SemidirectSpec spec{FiniteGroup::trivial(), FiniteGroup::cyclic(2), {{0, 1}}};
  const FiniteAction act(semidirect_product(spec), FiniteMeasureSpace::uniform(2),
                         {{0, 1}, {1, 0}}, Side::Left);
  EXPECT_EQ(code_of([&] { semidirect_common_fd(spec, act, {0}, {0, 1}); }),
            ErrorCode::ConditionFails);
}

TEST(Oracle, CommonDomainExamples) {
  EXPECT_TRUE(brute_force_common_fd_exists(ActionPair(shift(6, 3), shift(6, 3, Side::Right))));
  EXPECT_FALSE(brute_force_common_fd_exists(z6_pair()));
  const FiniteAction t(FiniteGroup::trivial(), FiniteMeasureSpace::uniform(2), {{0, 1}},
                       Side::Left);
  const FiniteAction tr(FiniteGroup::trivial(), FiniteMeasureSpace::uniform(2), {{0, 1}},
                        Side::Right);
  EXPECT_TRUE(brute_force_common_fd_exists(ActionPair(t, tr)));
  EXPECT_EQ(code_of([&] {
              brute_force_common_fd_exists(ActionPair(shift(18, 9), shift(18, 6, Side::Right)));
            }),
            ErrorCode::TooLarge);
}

TEST(Flow, LowerBoundsAreHonoured) {
  BoundedFlow net(4);
  const auto a = net.add_edge(0, 2, 2, 3);
  const auto b = net.add_edge(2, 3, 0, 5);
  const auto c = net.add_edge(3, 1, 2, 2);
  ASSERT_TRUE(net.solve(0, 1));
  EXPECT_EQ(net.flow(a), 2);
  EXPECT_EQ(net.flow(b), 2);
  EXPECT_EQ(net.flow(c), 2);

  BoundedFlow infeasible(3);
  infeasible.add_edge(0, 2, 3, 3);
  infeasible.add_edge(2, 1, 0, 2);
  EXPECT_FALSE(infeasible.solve(0, 1));
}

// Randomized properties over free commuting pairs.
class FiniteProperties : public ::testing::TestWithParam<int> {};

TEST_P(FiniteProperties, ConstructionsAgreeWithConditionAndOracle) {
  std::mt19937_64 rng(1000 + GetParam());
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = fixtures::random_free_commuting(rng, 12);
    if (!inst) continue;
    const auto& pair = inst->pair;
    EXPECT_TRUE(verify_fundamental_domain(pair.left(), find_fundamental_domain(pair.left())).ok);

    for (std::int64_t k = 1; k <= 3; ++k) {
      const bool cond =
          check_condition(pair, inst->x, inst->y, k, Rational(0), ConditionMode::AtLeast).holds;
      bool built = true;
      try {
        construct_packing_fds(pair, inst->x, inst->y, k);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ConditionFails);
        built = false;
      }
      EXPECT_EQ(built, cond);
      EXPECT_EQ(brute_force_packing_exists(pair, k), cond);
    }

    bool common = true;
    try {
      construct_common_fd(pair, inst->x, inst->y);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ConditionFails);
      common = false;
    }
    EXPECT_EQ(common, brute_force_common_fd_exists(pair));

    // F is a fundamental domain iff F ~ X.
    const std::size_t n = pair.space().size();
    for (int s = 0; s < 10; ++s) {
      AtomSet f;
      for (Atom a = 0; a < n; ++a)
        if (rng() % 3 == 0) f.push_back(a);
      const auto plan = dye_equivalent(pair.left(), f, inst->x);
      EXPECT_EQ(plan.has_value(), verify_fundamental_domain(pair.left(), f).ok);
      if (plan) {
        EXPECT_TRUE(is_valid_equidecomposition(pair.left(), *plan));
      }
    }
  }
}

TEST_P(FiniteProperties, KEpsilonMeasuresAreExact) {
  std::mt19937_64 rng(2000 + GetParam());
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = fixtures::random_free_commuting(rng, 12);
    if (!inst) continue;
    const auto& pair = inst->pair;
    const Rational ratio = pair.space().measure(inst->x) / pair.space().measure(inst->y);
    if (ratio < 1) continue;
    const std::int64_t k = to_int64(floor(ratio));
    const Rational eps = ratio - Rational(k);
    const auto fam = construct_k_epsilon(pair, inst->x, inst->y, k, eps);
    const Rational my = pair.space().measure(inst->y);
    for (const auto& f : fam.domains) EXPECT_EQ(pair.space().measure(f), my);
    EXPECT_EQ(pair.space().measure(fam.remainder), eps * my);
    EXPECT_TRUE(brute_force_k_epsilon_exists(pair, k, eps));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, FiniteProperties, ::testing::Range(0, 5));
