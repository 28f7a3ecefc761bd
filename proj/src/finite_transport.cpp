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
#include "tessella/finite/transport.hpp"

#include "tessella/error.hpp"
#include "tessella/finite/domains.hpp"
#include "tessella/finite/flow.hpp"

#include <algorithm>
#include <map>

namespace tessella::finite {

OrbitIncidence incidence(const ActionPair& pair) {
  OrbitIncidence inc;
  inc.left_orbit = pair.left().orbit_labels();
  inc.right_orbit = pair.right().orbit_labels();
  for (std::size_t l : inc.left_orbit) inc.left_count = std::max(inc.left_count, l + 1);
  for (std::size_t r : inc.right_orbit) inc.right_count = std::max(inc.right_count, r + 1);
  return inc;
}

std::optional<std::vector<bool>> select_atoms(const OrbitIncidence& inc, DegreeBounds left,
                                              DegreeBounds right) {
  const std::size_t source = 0;
  const std::size_t sink = 1;
  const std::size_t right_base = 2;
  const std::size_t left_base = right_base + inc.right_count;
  BoundedFlow net(left_base + inc.left_count);
  for (std::size_t r = 0; r < inc.right_count; ++r)
    net.add_edge(source, right_base + r, right.lower, right.upper);
  std::vector<std::size_t> atom_edge(inc.left_orbit.size());
  for (Atom x = 0; x < inc.left_orbit.size(); ++x)
    atom_edge[x] =
        net.add_edge(right_base + inc.right_orbit[x], left_base + inc.left_orbit[x], 0, 1);
  for (std::size_t l = 0; l < inc.left_count; ++l)
    net.add_edge(left_base + l, sink, left.lower, left.upper);
  if (!net.solve(source, sink)) return std::nullopt;
  std::vector<bool> selected(atom_edge.size());
  for (Atom x = 0; x < atom_edge.size(); ++x) selected[x] = net.flow(atom_edge[x]) == 1;
  return selected;
}

std::vector<AtomSet> layer_by_right_orbit(const OrbitIncidence& inc,
                                          const std::vector<bool>& selected,
                                          std::size_t layers) {
  std::vector<AtomSet> out(layers);
  std::vector<std::size_t> used(inc.right_count, 0);
  for (Atom x = 0; x < selected.size(); ++x) {
    if (!selected[x]) continue;
    const std::size_t layer = used[inc.right_orbit[x]]++;
    TESSELLA_REQUIRE(layer < layers, ErrorCode::VerificationFailed,
                     "right orbit received more atoms than layers");
    out[layer].push_back(x);
  }
  return out;
}

namespace {

void require_domains(const ActionPair& pair, const AtomSet& x, const AtomSet& y) {
  TESSELLA_REQUIRE(verify_fundamental_domain(pair.left(), x).ok, ErrorCode::InvalidDomain,
                   "X is not a fundamental domain of the left action");
  TESSELLA_REQUIRE(verify_fundamental_domain(pair.right(), y).ok, ErrorCode::InvalidDomain,
                   "Y is not a fundamental domain of the right action");
}

void require_post(bool ok, const std::string& what) {
  TESSELLA_REQUIRE(ok, ErrorCode::VerificationFailed, what);
}

}  // namespace

ConditionReport check_condition(const ActionPair& pair, const AtomSet& x, const AtomSet& y,
                                std::int64_t k, const Rational& eps, ConditionMode mode) {
  TESSELLA_REQUIRE(k >= 1, ErrorCode::InvalidInput, "k must be at least 1");
  TESSELLA_REQUIRE(eps >= 0 && eps < 1, ErrorCode::InvalidInput, "eps must lie in [0, 1)");
  require_domains(pair, x, y);
  const auto& space = pair.space();
  std::vector<bool> in_x(space.size(), false), in_y(space.size(), false);
  for (Atom a : x) in_x[a] = true;
  for (Atom a : y) in_y[a] = true;

  ConditionReport report;
  report.factor = Rational(k) + eps;
  report.holds = true;
  for (auto& block : joint_invariant_partition(pair)) {
    BlockMeasure m{std::move(block), Rational(0), Rational(0), false};
    for (Atom a : m.block) {
      if (in_x[a]) m.in_x += space.weight(a);
      if (in_y[a]) m.in_y += space.weight(a);
    }
    const Rational target = report.factor * m.in_y;
    m.holds = mode == ConditionMode::Equality ? m.in_x == target : m.in_x >= target;
    report.holds = report.holds && m.holds;
    report.blocks.push_back(std::move(m));
  }
  return report;
}

std::vector<AtomSet> construct_packing_fds(const ActionPair& pair, const AtomSet& x,
                                           const AtomSet& y, std::int64_t k) {
  const auto report = check_condition(pair, x, y, k, Rational(0), ConditionMode::AtLeast);
  TESSELLA_REQUIRE(report.holds, ErrorCode::ConditionFails,
                   "m(A∩X) >= k m(A∩Y) fails on some invariant block");
  const auto inc = incidence(pair);
  const auto selected = select_atoms(inc, {0, 1}, {k, k});
  TESSELLA_REQUIRE(selected.has_value(), ErrorCode::VerificationFailed,
                   "flow infeasible although the measure condition holds");
  auto family = layer_by_right_orbit(inc, *selected, static_cast<std::size_t>(k));
  for (const auto& f : family)
    require_post(verify_fundamental_domain(pair.right(), f).ok,
                 "constructed F_i is not a right fundamental domain");
  require_post(verify_packing(pair.left(), family).ok,
               "constructed family does not pack by the left action");
  return family;
}

AtomSet KEpsilonFamily::union_set() const {
  std::vector<Atom> all(remainder.begin(), remainder.end());
  for (const auto& d : domains) all.insert(all.end(), d.begin(), d.end());
  return make_atom_set(std::move(all));
}

KEpsilonFamily construct_k_epsilon(const ActionPair& pair, const AtomSet& x, const AtomSet& y,
                                   std::int64_t k, const Rational& eps) {
  const auto report = check_condition(pair, x, y, k, eps, ConditionMode::Equality);
  TESSELLA_REQUIRE(report.holds, ErrorCode::ConditionFails,
                   "m(A∩X) = (k+eps) m(A∩Y) fails on some invariant block");
  const auto inc = incidence(pair);
  const auto selected = select_atoms(inc, {1, 1}, {k, k + 1});
  TESSELLA_REQUIRE(selected.has_value(), ErrorCode::VerificationFailed,
                   "flow infeasible although the measure condition holds");
  auto layers = layer_by_right_orbit(inc, *selected, static_cast<std::size_t>(k) + 1);
  KEpsilonFamily out;
  out.remainder = std::move(layers.back());
  layers.pop_back();
  out.domains = std::move(layers);

  const auto& space = pair.space();
  std::vector<bool> in_rem(space.size(), false);
  for (Atom a : out.remainder) in_rem[a] = true;
  // On each block the number of right orbits at k+1 is |O|/|Gamma| - k|O|/|Lambda|,
  // an integer; equivalently m(F_eps ∩ O) = eps m(Y ∩ O).
  for (const auto& b : report.blocks) {
    Rational rem(0);
    for (Atom a : b.block)
      if (in_rem[a]) rem += space.weight(a);
    require_post(rem == eps * b.in_y, "remainder measure differs from eps m(Y) on a block");
  }
  for (const auto& f : out.domains)
    require_post(verify_fundamental_domain(pair.right(), f).ok,
                 "constructed F_i is not a right fundamental domain");
  require_post(verify_packing(pair.right(), {out.remainder}).ok,
               "F_eps does not pack by the right action");
  require_post(verify_fundamental_domain(pair.left(), out.union_set()).ok,
               "family union is not a left fundamental domain");
  return out;
}

AtomSet construct_common_fd(const ActionPair& pair, const AtomSet& x, const AtomSet& y) {
  const auto report = check_condition(pair, x, y, 1, Rational(0), ConditionMode::Equality);
  TESSELLA_REQUIRE(report.holds, ErrorCode::ConditionFails,
                   "m(A∩X) = m(A∩Y) fails on some invariant block");
  const auto inc = incidence(pair);
  const auto selected = select_atoms(inc, {1, 1}, {1, 1});
  TESSELLA_REQUIRE(selected.has_value(), ErrorCode::VerificationFailed,
                   "perfect matching missing although the measure condition holds");
  AtomSet d;
  for (Atom a = 0; a < selected->size(); ++a)
    if ((*selected)[a]) d.push_back(a);
  require_post(verify_fundamental_domain(pair.left(), d).ok &&
                   verify_fundamental_domain(pair.right(), d).ok,
               "common transversal failed verification");
  return d;
}

std::optional<Equidecomposition> dye_equivalent(const FiniteAction& action, const AtomSet& e,
                                                const AtomSet& f) {
  const auto labels = action.orbit_labels();
  std::map<std::size_t, std::pair<AtomSet, AtomSet>> per_orbit;
  for (Atom a : e) per_orbit[labels.at(a)].first.push_back(a);
  for (Atom a : f) per_orbit[labels.at(a)].second.push_back(a);

  const auto& group = action.group();
  std::map<Element, std::vector<Atom>> moved;
  for (const auto& [orbit, sets] : per_orbit) {
    const auto& [src, dst] = sets;
    if (src.size() != dst.size()) return std::nullopt;
    for (std::size_t i = 0; i < src.size(); ++i) {
      std::optional<Element> move;
      if (action.apply(group.identity(), src[i]) == dst[i]) move = group.identity();
      for (Element g = 0; !move && g < group.order(); ++g)
        if (action.apply(g, src[i]) == dst[i]) move = g;
      moved[*move].push_back(src[i]);
    }
  }
  Equidecomposition plan{{}, e, f};
  for (auto& [g, atoms] : moved) plan.pieces.push_back({make_atom_set(std::move(atoms)), g});
  return plan;
}

bool is_valid_equidecomposition(const FiniteAction& action, const Equidecomposition& plan) {
  std::vector<Atom> src, dst;
  for (const auto& piece : plan.pieces) {
    if (piece.element >= action.group().order()) return false;
    src.insert(src.end(), piece.atoms.begin(), piece.atoms.end());
    const auto moved = action.translate(piece.element, piece.atoms);
    dst.insert(dst.end(), moved.begin(), moved.end());
  }
  const std::size_t total = src.size();
  src = make_atom_set(std::move(src));
  dst = make_atom_set(std::move(dst));
  return src.size() == total && dst.size() == total && src == plan.source && dst == plan.target;
}

}  // namespace tessella::finite
