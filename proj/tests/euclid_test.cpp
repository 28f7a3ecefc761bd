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
#include "support/random_lattices.hpp"
#include "tessella/error.hpp"
#include "tessella/euclid/boundary.hpp"
#include "tessella/euclid/construct.hpp"
#include "tessella/euclid/dirichlet.hpp"
#include "tessella/euclid/region.hpp"
#include "tessella/euclid/translation.hpp"

#include <gtest/gtest.h>

using namespace tessella;
using namespace tessella::euclid;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

RVector vec(std::initializer_list<Rational> xs) {
  RVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

RMatrix identity(Eigen::Index n) { return RMatrix::Identity(n, n); }

Box box(std::vector<Rational> lo, std::vector<Rational> hi) { return {std::move(lo), std::move(hi)}; }

FrameRegion std_region(std::vector<Box> boxes) {
  const auto n = static_cast<Eigen::Index>(boxes.front().dim());
  return FrameRegion(identity(n), std::move(boxes));
}

EucLattice half_two() { return EucLattice::diagonal({q(1, 2), q(2)}); }

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

TEST(Lattice, Covolume) {
  EXPECT_EQ(covolume(EucLattice::integer(2)), 1);
  EXPECT_EQ(covolume(half_two()), 1);
  RMatrix b(2, 2);
  b << 2, 1, 1, 2;
  EXPECT_EQ(covolume(EucLattice(b)), 3);
  EXPECT_THROW(EucLattice(RMatrix::Zero(2, 2)), Error);
}

TEST(Lattice, SumAndIntersection) {
  const auto z2 = EucLattice::integer(2);
  const auto meet = lattice_intersection(z2, half_two());
  EXPECT_EQ(meet, EucLattice::diagonal({q(1), q(2)}));
  EXPECT_EQ(covolume(meet), 2);
  EXPECT_EQ(lattice_index(meet, z2), 2);
  EXPECT_EQ(lattice_index(meet, half_two()), 2);
  EXPECT_EQ(lattice_intersection(half_two(), half_two()), half_two());

  const auto sum = lattice_sum(z2, half_two());
  EXPECT_EQ(sum, EucLattice::diagonal({q(1, 2), q(1)}));
  EXPECT_EQ(covolume(sum), q(1, 2));

  EXPECT_EQ(code_of([&] { lattice_index(z2, meet); }), ErrorCode::NotSublattice);
  EXPECT_EQ(code_of([&] { lattice_sum(z2, EucLattice::integer(3)); }), ErrorCode::InvalidInput);
}

TEST(Lattice, IntersectionMatchesEnumeration) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = fixtures::random_lattice(rng, 2, 3, 3);
    const auto b = fixtures::random_lattice(rng, 2, 3, 3);
    const auto meet = lattice_intersection(a, b);
    for (Eigen::Index j = 0; j < 2; ++j) {
      EXPECT_TRUE(a.contains(meet.basis().col(j)));
      EXPECT_TRUE(b.contains(meet.basis().col(j)));
    }
    // Every common point found by brute force lies in the computed meet.
    for (int i = -12; i <= 12; ++i)
      for (int j = -12; j <= 12; ++j) {
        const RVector v = a.basis() * vec({q(i), q(j)});
        if (b.contains(v)) EXPECT_TRUE(meet.contains(v));
      }
    EXPECT_EQ(Rational(lattice_index(meet, a)) * covolume(a), covolume(meet));
    const auto sum = lattice_sum(a, b);
    EXPECT_EQ(Rational(lattice_index(a, sum)) * covolume(sum), covolume(a));
  }
}

TEST(Region, ReduceMod) {
  const auto z2 = EucLattice::integer(2);
  const auto unit = region_reduce_mod(FrameRegion::unit_box(identity(2)), z2);
  ASSERT_EQ(unit.levels.size(), 1u);
  EXPECT_EQ(unit.measure(1), 1);

  const auto two = region_reduce_mod(std_region({box({q(0), q(0)}, {q(2), q(1)})}), z2);
  ASSERT_EQ(two.levels.size(), 1u);
  EXPECT_EQ(two.measure(2), 1);

  const auto mixed = region_reduce_mod(std_region({box({q(0), q(0)}, {q(3, 2), q(1)})}), z2);
  EXPECT_EQ(mixed.measure(2), q(1, 2));
  EXPECT_EQ(mixed.measure(1), q(1, 2));
  EXPECT_TRUE(mixed.levels.at(2).contains(vec({q(1, 4), q(1, 2)})));
  EXPECT_TRUE(mixed.levels.at(1).contains(vec({q(3, 4), q(1, 2)})));
}

TEST(Region, ReduceConservesMeasure) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> corner(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto l = fixtures::random_lattice(rng, 2, 3, 3);
    const RMatrix frame = fixtures::random_invertible(rng, 2, 3, 2);
    std::vector<Box> boxes;
    for (int k = 0; k < 3; ++k) {
      const Rational x0 = q(corner(rng), 2), y0 = q(corner(rng), 2);
      boxes.push_back(box({x0 + 10 * k, y0}, {x0 + 10 * k + q(1 + trial % 3, 2), y0 + q(3, 2)}));
    }
    const FrameRegion r(frame, boxes);
    const auto map = region_reduce_mod(r, l);
    Rational total(0), torus(0);
    for (const auto& [m, region] : map.levels) {
      total += Rational(static_cast<long>(m)) * map.measure(m);
      torus += map.measure(m);
    }
    EXPECT_EQ(total, r.measure());
    EXPECT_EQ(torus, covolume(l));
  }
}

TEST(Region, VerifyTiling) {
  const auto z2 = EucLattice::integer(2);
  EXPECT_TRUE(verify_tiling_exact(FrameRegion::unit_box(identity(2)), z2).ok);

  const auto half = std_region({box({q(0), q(0)}, {q(1, 2), q(1)})});
  EXPECT_TRUE(verify_packing_exact(half, z2).ok);
  const auto gap = verify_tiling_exact(half, z2);
  EXPECT_FALSE(gap.ok);
  ASSERT_TRUE(gap.witness);
  EXPECT_EQ(gap.multiplicity, 0u);
  EXPECT_FALSE(half.contains(*gap.witness));
  EXPECT_GE((*gap.witness)(0), q(1, 2));

  const auto doubled = std_region({box({q(0), q(0)}, {q(2), q(1)})});
  const auto over = verify_packing_exact(doubled, z2);
  EXPECT_FALSE(over.ok);
  EXPECT_EQ(*over.witness, vec({q(1, 2), q(1, 2)}));
  EXPECT_EQ(over.multiplicity, 2u);
}

TEST(Region, ParallelepipedTilesRandomLattices) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 1 + trial % 3;
    const auto l = fixtures::random_lattice(rng, n);
    const auto p = fundamental_parallelepiped(l);
    EXPECT_TRUE(verify_tiling_exact(p, l).ok);
    EXPECT_EQ(p.measure(), covolume(l));
  }
  const auto p = fundamental_parallelepiped(half_two());
  EXPECT_TRUE(p.contains(vec({q(0), q(0)})));
  EXPECT_TRUE(p.contains(vec({q(49, 100), q(199, 100)})));
  EXPECT_FALSE(p.contains(vec({q(1, 2), q(1)})));
}

TEST(Region, ForeignFrameTiling) {
  // The hexagonal-type lattice tiled by a box in the frame of Z^2.
  RMatrix b(2, 2);
  b << 2, 1, 0, 3;
  const EucLattice l(b);
  EXPECT_TRUE(verify_tiling_exact(std_region({box({q(0), q(0)}, {q(2), q(3)})}), l).ok);
  EXPECT_FALSE(verify_tiling_exact(std_region({box({q(0), q(0)}, {q(3), q(2)})}), l).ok);
}

TEST(Region, FunctionTiling) {
  const auto z2 = EucLattice::integer(2);
  EXPECT_TRUE(function_tiling_check(
      StepFunction({{FrameRegion::unit_box(identity(2)), q(1)}}), z2));
  EXPECT_TRUE(function_tiling_check(
      StepFunction({{std_region({box({q(0), q(0)}, {q(2), q(1)})}), q(1, 2)}}), z2));
  EXPECT_FALSE(function_tiling_check(
      StepFunction({{std_region({box({q(0), q(0)}, {q(3, 2), q(1)})}), q(1)}}), z2));
  EXPECT_THROW(StepFunction({{FrameRegion::unit_box(identity(2)), q(-1)}}), Error);
}

TEST(Region, FunctionTilingAgreesWithRegionTiling) {
  std::mt19937_64 rng(17);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto l = EucLattice::diagonal({q(1 + trial % 2), q(1, 1 + trial % 3)});
    // Random union of half-unit cells in [0,2)^2.
    std::vector<Box> cells;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (coin(rng)) cells.push_back(box({q(i, 2), q(j, 2)}, {q(i + 1, 2), q(j + 1, 2)}));
    if (cells.empty()) continue;
    const auto d = std_region(cells);
    EXPECT_EQ(function_tiling_check(StepFunction({{d, q(1)}}), l), verify_tiling_exact(d, l).ok);
  }
}

TEST(CommonFd, HalfTwoAgainstIntegers) {
  const auto z2 = EucLattice::integer(2);
  const auto d = common_fd_commensurable(z2, half_two());
  EXPECT_EQ(d.measure(), 1);
  EXPECT_TRUE(verify_tiling_exact(d, z2).ok);
  EXPECT_TRUE(verify_tiling_exact(d, half_two()).ok);
  // [0,1/2)x[0,1) and [1/2,1)x[1,2).
  for (const auto& [p, inside] :
       std::vector<std::pair<RVector, bool>>{{vec({q(1, 4), q(1, 2)}), true},
                                             {vec({q(3, 4), q(3, 2)}), true},
                                             {vec({q(3, 4), q(1, 2)}), false},
                                             {vec({q(1, 4), q(3, 2)}), false}})
    EXPECT_EQ(d.contains(p), inside);
}

TEST(CommonFd, EqualAndMismatched) {
  const auto l = half_two();
  const auto d = common_fd_commensurable(l, l);
  EXPECT_EQ(d.frame(), fundamental_parallelepiped(l).frame());
  EXPECT_EQ(d.boxes(), fundamental_parallelepiped(l).boxes());

  const auto other = EucLattice::diagonal({q(2), q(1, 2)});
  const auto e = common_fd_commensurable(EucLattice::integer(2), other);
  EXPECT_EQ(e.measure(), 1);
  EXPECT_TRUE(verify_tiling_exact(e, other).ok);
  EXPECT_TRUE(verify_tiling_exact(e, EucLattice::integer(2)).ok);

  EXPECT_EQ(code_of([&] {
              common_fd_commensurable(EucLattice::integer(2), EucLattice::diagonal({q(1), q(2)}));
            }),
            ErrorCode::CovolumeMismatch);
}

TEST(CommonFd, RandomPairs) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 1 + trial % 3;
    const int bound = n == 3 ? 2 : 3;
    const auto [a, b] = fixtures::random_equal_covolume_pair(rng, n, bound, bound);
    const auto d = common_fd_commensurable(a, b);
    EXPECT_TRUE(verify_tiling_exact(d, a).ok);
    EXPECT_TRUE(verify_tiling_exact(d, b).ok);
    EXPECT_EQ(d.measure(), covolume(a));
  }
}

TEST(KEpsilon, Examples) {
  const auto z2 = EucLattice::integer(2);
  const auto stacked = construct_k_epsilon_lattices(z2, EucLattice::diagonal({q(1), q(1, 2)}));
  EXPECT_EQ(stacked.k, 2);
  EXPECT_EQ(stacked.eps, 0);
  ASSERT_EQ(stacked.domains.size(), 2u);
  EXPECT_TRUE(stacked.remainder.empty());
  EXPECT_TRUE(stacked.domains[0].contains(vec({q(1, 2), q(1, 4)})));
  EXPECT_TRUE(stacked.domains[1].contains(vec({q(1, 2), q(3, 4)})));

  const auto same = construct_k_epsilon_lattices(half_two(), half_two());
  EXPECT_EQ(same.k, 1);
  EXPECT_TRUE(same.remainder.empty());
  EXPECT_EQ(same.domains[0].measure(), 1);

  const auto third = EucLattice::diagonal({q(2, 3), q(1)});
  const auto frac = construct_k_epsilon_lattices(z2, third);
  EXPECT_EQ(frac.k, 1);
  EXPECT_EQ(frac.eps, q(1, 2));
  EXPECT_EQ(frac.remainder.measure(), q(1, 3));
  EXPECT_TRUE(verify_tiling_exact(frac.domains[0], third).ok);
  EXPECT_TRUE(verify_packing_exact(frac.remainder, third).ok);
  EXPECT_TRUE(verify_tiling_exact(frac.union_region(), z2).ok);

  EXPECT_EQ(code_of([&] { construct_k_epsilon_lattices(third, z2); }),
            ErrorCode::ConditionFails);
}

TEST(KEpsilon, RandomPairs) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = fixtures::random_lattice(rng, 2, 3, 2);
    auto b = fixtures::random_lattice(rng, 2, 3, 2);
    if (covolume(a) < covolume(b)) std::swap(a, b);
    const auto fam = construct_k_epsilon_lattices(a, b);
    EXPECT_EQ(Rational(fam.k) + fam.eps, covolume(a) / covolume(b));
    EXPECT_EQ(fam.remainder.measure(), fam.eps * covolume(b));
    EXPECT_TRUE(verify_tiling_exact(fam.union_region(), a).ok);
  }
}

namespace {

TranslationSystem one_dim(std::vector<std::pair<long, long>> steps) {
  std::vector<TranslationComponent> comps;
  for (auto [g, l] : steps) {
    RMatrix gm(1, 1), lm(1, 1);
    gm << g;
    lm << l;
    comps.push_back({gm, lm});
  }
  return TranslationSystem(std::move(comps));
}

FrameRegion interval(const Rational& a, const Rational& b) {
  return FrameRegion(identity(1), {box({a}, {b})});
}

}  // namespace

TEST(Translation, SwappedSpeeds) {
  // Component 0: Gamma by 2, Lambda by 1. Component 1: the other way round.
  const auto ts = one_dim({{2, 1}, {1, 2}});
  const auto report = translation_system_check(ts, {interval(0, 2), interval(0, 1)},
                                               {interval(0, 1), interval(0, 2)});
  EXPECT_FALSE(report.pass);
  EXPECT_EQ(report.ratios, (std::vector<Rational>{q(2), q(1, 2)}));
  ASSERT_TRUE(report.offending);
  EXPECT_EQ(*report.offending, std::make_pair(std::size_t{0}, std::size_t{1}));
  EXPECT_EQ(code_of([&] { translation_system_common_fd(ts); }), ErrorCode::ConditionFails);
  EXPECT_EQ(code_of([&] {
              translation_system_check(ts, {interval(0, 1), interval(0, 1)},
                                       {interval(0, 1), interval(0, 2)});
            }),
            ErrorCode::InvalidDomain);
}

TEST(Translation, PassingSystems) {
  const auto same = one_dim({{3, 3}});
  const auto r = translation_ratios(same);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.ratios.front(), 1);

  const auto three_halves = one_dim({{3, 2}, {6, 4}});
  EXPECT_TRUE(translation_system_check(three_halves, {interval(0, 3), interval(0, 6)},
                                       {interval(0, 2), interval(0, 4)})
                  .pass);
  EXPECT_EQ(code_of([&] { translation_system_common_fd(three_halves); }),
            ErrorCode::ConditionFails);

  RMatrix g(2, 2), l(2, 2);
  g << 1, 0, 0, 1;
  l << q(1, 2), 0, 0, 2;
  const TranslationSystem twin({{g, l}, {g, l}});
  const auto domains = translation_system_common_fd(twin);
  ASSERT_EQ(domains.size(), 2u);
  for (const auto& d : domains) {
    EXPECT_TRUE(verify_tiling_exact(d, EucLattice(g)).ok);
    EXPECT_TRUE(verify_tiling_exact(d, EucLattice(l)).ok);
  }
  const TranslationSystem identical({{g, g}, {l, l}});
  const auto para = translation_system_common_fd(identical);
  EXPECT_EQ(para[1].boxes(), fundamental_parallelepiped(EucLattice(l)).boxes());
}

namespace {

Rational rational_gcd(const Rational& a, const Rational& b) {
  const Integer d = denom(a) * denom(b);
  return Rational(gcd(numer(a * Rational(d)), numer(b * Rational(d))), d);
}

// m(A ∩ [0, hi)) for the periodic set A = cells + prod period_i Z, by direct
// enumeration of the translates that reach the box.
Rational periodic_overlap(const std::vector<Box>& cells, const std::vector<Rational>& period,
                          const std::vector<Rational>& hi) {
  const std::size_t n = period.size();
  Rational total(0);
  std::vector<long> count(n);
  for (std::size_t i = 0; i < n; ++i) count[i] = static_cast<long>(to_int64(ceil(hi[i] / period[i])));
  std::vector<long> k(n, 0);
  while (true) {
    for (const Box& c : cells) {
      Rational v(1);
      for (std::size_t i = 0; i < n; ++i) {
        const Rational lo = std::max(c.lo[i] + Rational(k[i]) * period[i], Rational(0));
        const Rational up = std::min(c.hi[i] + Rational(k[i]) * period[i], hi[i]);
        v *= up > lo ? up - lo : Rational(0);
      }
      total += v;
    }
    std::size_t i = 0;
    while (i < n && ++k[i] >= count[i]) k[i++] = 0;
    if (i == n) break;
  }
  return total;
}

}  // namespace

TEST(Translation, AgreesWithSamplingOracle) {
  std::mt19937_64 rng(29);
  const std::vector<Rational> steps = {q(1, 2), q(1), q(3, 2), q(2), q(3)};
  const std::vector<Rational> ratios = {q(1, 2), q(1), q(2), q(3, 2)};
  std::uniform_int_distribution<std::size_t> pick_step(0, steps.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_ratio(0, ratios.size() - 1);
  std::bernoulli_distribution coin(0.5);
  int passes = 0, fails = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d = 1 + trial % 2;
    const std::size_t comps = 1 + trial % 3;
    const bool aligned = coin(rng);
    const Rational rho = ratios[pick_ratio(rng)];
    std::vector<TranslationComponent> tc;
    std::vector<std::vector<Rational>> gs, ls;
    for (std::size_t c = 0; c < comps; ++c) {
      std::vector<Rational> g(d), l(d);
      for (Eigen::Index i = 0; i < d; ++i) {
        g[i] = steps[pick_step(rng)];
        l[i] = steps[pick_step(rng)];
      }
      if (aligned) {
        l = g;
        l[0] = g[0] / rho;
      }
      RMatrix gm = RMatrix::Zero(d, d), lm = RMatrix::Zero(d, d);
      for (Eigen::Index i = 0; i < d; ++i) {
        gm(i, i) = g[i];
        lm(i, i) = l[i];
      }
      tc.push_back({gm, lm});
      gs.push_back(g);
      ls.push_back(l);
    }
    const TranslationSystem ts(tc);
    std::vector<FrameRegion> xs, ys;
    for (std::size_t c = 0; c < comps; ++c) {
      xs.push_back(FrameRegion(identity(d), {box(std::vector<Rational>(d, q(0)), gs[c])}));
      ys.push_back(FrameRegion(identity(d), {box(std::vector<Rational>(d, q(0)), ls[c])}));
    }
    const bool verdict = translation_system_check(ts, xs, ys).pass;

    // Oracle: random invariant sets built from quarter cells of the joint
    // period box of each component.
    std::optional<Rational> common;
    bool agree = true;
    for (int sample = 0; sample < 1000 && agree; ++sample) {
      Rational in_x(0), in_y(0);
      for (std::size_t c = 0; c < comps; ++c) {
        std::vector<Rational> period(d);
        for (Eigen::Index i = 0; i < d; ++i) period[i] = rational_gcd(gs[c][i], ls[c][i]);
        std::vector<Box> cells;
        const int cells_per_axis = 4;
        const int total = d == 1 ? cells_per_axis : cells_per_axis * cells_per_axis;
        for (int cell = 0; cell < total; ++cell) {
          if (!coin(rng)) continue;
          Box b{std::vector<Rational>(d), std::vector<Rational>(d)};
          int rest = cell;
          for (Eigen::Index i = 0; i < d; ++i) {
            const int k = rest % cells_per_axis;
            rest /= cells_per_axis;
            b.lo[i] = period[i] * q(k, cells_per_axis);
            b.hi[i] = period[i] * q(k + 1, cells_per_axis);
          }
          cells.push_back(b);
        }
        in_x += periodic_overlap(cells, period, gs[c]);
        in_y += periodic_overlap(cells, period, ls[c]);
      }
      if (in_y == 0) {
        agree = in_x == 0;
        continue;
      }
      const Rational r = in_x / in_y;
      if (!common) common = r;
      agree = *common == r;
    }
    EXPECT_EQ(verdict, agree) << "trial " << trial;
    (verdict ? passes : fails)++;
  }
  EXPECT_GT(passes, 0);
  EXPECT_GT(fails, 0);
}

TEST(Dirichlet, Examples) {
  const auto square = dirichlet_domain(EucLattice::integer(2), vec({q(0), q(0)}));
  EXPECT_EQ(square.vertices, (std::vector<RVector>{vec({q(-1, 2), q(-1, 2)}),
                                                   vec({q(-1, 2), q(1, 2)}),
                                                   vec({q(1, 2), q(-1, 2)}),
                                                   vec({q(1, 2), q(1, 2)})}));
  EXPECT_EQ(square.volume(), 1);

  RMatrix b(2, 2);
  b << 2, 1, 1, 2;
  const auto hex = dirichlet_domain(EucLattice(b), vec({q(0), q(0)}));
  EXPECT_EQ(hex.vertices.size(), 6u);
  EXPECT_EQ(hex.normals.size(), 6u);
  EXPECT_EQ(hex.volume(), 3);
  EXPECT_TRUE(hex.symmetric_about(vec({q(0), q(0)})));
  // Half-plane oracle: the cell is where 0 is the nearest orbit point.
  for (int i = -8; i <= 8; ++i)
    for (int j = -8; j <= 8; ++j) {
      const RVector x = vec({q(i, 4), q(j, 4)});
      bool nearest = true;
      for (int a = -3; a <= 3; ++a)
        for (int c = -3; c <= 3; ++c) {
          const RVector v = b * vec({q(a), q(c)});
          if ((x - v).squaredNorm() < x.squaredNorm()) nearest = false;
        }
      EXPECT_EQ(hex.contains(x), nearest) << i << "," << j;
    }

  const auto line = dirichlet_domain(EucLattice::diagonal({q(3)}), vec({q(1)}));
  EXPECT_EQ(line.vertices, (std::vector<RVector>{vec({q(-1, 2)}), vec({q(5, 2)})}));

  const auto cube = dirichlet_domain(EucLattice::integer(3), vec({q(1), q(2), q(3)}));
  EXPECT_EQ(cube.vertices.size(), 8u);
  EXPECT_EQ(cube.volume(), 1);

  EXPECT_EQ(code_of([&] { dirichlet_domain(EucLattice::integer(4), RVector::Zero(4)); }),
            ErrorCode::DimensionTooLarge);
}

TEST(Dirichlet, RandomVolumesAndSymmetry) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 2 + trial % 2;
    const auto l = fixtures::random_lattice(rng, n, 3, 3);
    RVector x0(n);
    for (Eigen::Index i = 0; i < n; ++i) x0(i) = fixtures::random_rational(rng, 3, 3);
    const auto cell = dirichlet_domain(l, x0);
    EXPECT_EQ(cell.volume(), covolume(l));
    EXPECT_TRUE(cell.symmetric_about(x0));
    EXPECT_TRUE(cell.contains(x0));
  }
}

TEST(Boundary, Counts) {
  const auto z2 = EucLattice::integer(2);
  const auto three = boundary_count(z2, std_region({box({q(0), q(0)}, {q(3), q(3)})}));
  EXPECT_EQ(three.interior, 9u);
  EXPECT_EQ(three.boundary, 0u);

  for (long n = 1; n <= 6; ++n) {
    const Rational side = q(2 * n + 1, 2);
    const auto c = boundary_count(z2, std_region({box({q(0), q(0)}, {side, side})}));
    EXPECT_EQ(c.interior, static_cast<std::uint64_t>(n * n));
    EXPECT_EQ(c.boundary, static_cast<std::uint64_t>(2 * n + 1));
  }

  // X in a scaled frame against a box in the standard frame.
  const auto l = EucLattice::diagonal({q(2), q(1, 2)});
  const auto c = boundary_count(l, std_region({box({q(0), q(0)}, {q(4), q(1)})}));
  EXPECT_EQ(c.interior, 4u);
  EXPECT_EQ(c.boundary, 0u);

  RMatrix skew(2, 2);
  skew << 1, 1, 0, 1;
  EXPECT_EQ(code_of([&] {
              boundary_count(EucLattice::integer(2), FrameRegion::unit_box(skew),
                             std_region({box({q(0), q(0)}, {q(1), q(1)})}));
            }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([&] {
              boundary_count(EucLattice::integer(2), std_region({box({q(0), q(0)}, {q(2), q(1)})}),
                             std_region({box({q(0), q(0)}, {q(1), q(1)})}));
            }),
            ErrorCode::InvalidDomain);
}

TEST(Boundary, SeriesDecreases) {
  const auto z2 = EucLattice::integer(2);
  std::vector<Rational> scales;
  for (long n = 1; n <= 64; ++n) scales.push_back(q(2 * n + 1, 2));
  const auto rows =
      boundary_series(z2, fundamental_parallelepiped(z2), FrameRegion::unit_box(identity(2)), scales);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const long n = static_cast<long>(i) + 1;
    EXPECT_EQ(rows[i].count.boundary, static_cast<std::uint64_t>(2 * n + 1));
    EXPECT_EQ(rows[i].ratio, q(2 * n + 1) / (q(2 * n + 1, 2) * q(2 * n + 1, 2)));
    if (i > 0) EXPECT_LT(rows[i].ratio, rows[i - 1].ratio);
  }
  EXPECT_LT(rows.back().ratio, q(1, 30));
}

TEST(Boundary, Sandwich) {
  const auto z2 = EucLattice::integer(2);
  const auto x = fundamental_parallelepiped(z2);
  for (long n = 1; n <= 8; ++n) {
    const auto a = std_region({box({q(0), q(0)}, {q(n), q(n)})});
    const auto b = std_region({box({q(-1), q(-1)}, {q(n + 1), q(n + 1)})});
    const auto c = std_region({box({q(-2), q(-2)}, {q(n + 2), q(n + 2)})});
    const auto r = sandwich_check(z2, x, a, b, c);
    EXPECT_TRUE(r.nested);
    EXPECT_TRUE(r.absorbing);
    EXPECT_EQ(r.ratio, q(n * n) / q((n + 4) * (n + 4)));
  }
  const auto half = std_region({box({q(0), q(0)}, {q(5, 2), q(5, 2)})});
  const auto r = sandwich_check(z2, x, half, half, half);
  EXPECT_TRUE(r.nested);
  EXPECT_FALSE(r.absorbing);
}
