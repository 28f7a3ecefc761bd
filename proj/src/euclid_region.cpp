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
#include "tessella/euclid/region.hpp"

#include "tessella/error.hpp"
#include "tessella/linalg.hpp"

#include <algorithm>
#include <functional>

namespace tessella::euclid {

Rational Box::volume() const {
  Rational v(1);
  for (std::size_t i = 0; i < dim(); ++i) v *= hi[i] - lo[i];
  return v;
}

bool Box::contains(const RVector& p) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (p(i) < lo[i] || p(i) >= hi[i]) return false;
  return true;
}

RVector Box::center() const {
  RVector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c(i) = (lo[i] + hi[i]) / 2;
  return c;
}

std::optional<Box> intersect(const Box& a, const Box& b) {
  Box out{a.lo, a.hi};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    out.lo[i] = std::max(a.lo[i], b.lo[i]);
    out.hi[i] = std::min(a.hi[i], b.hi[i]);
    if (out.lo[i] >= out.hi[i]) return std::nullopt;
  }
  return out;
}

Box translate(const Box& b, const RVector& shift) {
  Box out = b;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    out.lo[i] += shift(i);
    out.hi[i] += shift(i);
  }
  return out;
}

FrameRegion::FrameRegion(RMatrix frame, std::vector<Box> boxes, Trusted)
    : frame_(std::move(frame)), boxes_(std::move(boxes)) {
  TESSELLA_REQUIRE(frame_.rows() >= 1 && frame_.rows() == frame_.cols(), ErrorCode::InvalidInput,
                   "region frame must be a nonempty square matrix");
  auto inv = linalg::inverse(frame_);
  TESSELLA_REQUIRE(inv.has_value(), ErrorCode::InvalidInput, "region frame is singular");
  frame_inverse_ = std::move(*inv);
  frame_volume_ = boost::multiprecision::abs(linalg::determinant(frame_));
  validate_shapes();
}

FrameRegion::FrameRegion(RMatrix frame, std::vector<Box> boxes)
    : FrameRegion(std::move(frame), std::move(boxes), Trusted{}) {
  for (std::size_t i = 0; i < boxes_.size(); ++i)
    for (std::size_t j = i + 1; j < boxes_.size(); ++j)
      TESSELLA_REQUIRE(!intersect(boxes_[i], boxes_[j]), ErrorCode::InvalidInput,
                       "region boxes " + std::to_string(i) + " and " + std::to_string(j) +
                           " overlap");
}

void FrameRegion::validate_shapes() const {
  const auto n = static_cast<std::size_t>(dim());
  for (const Box& b : boxes_) {
    TESSELLA_REQUIRE(b.lo.size() == n && b.hi.size() == n, ErrorCode::InvalidInput,
                     "box dimension does not match the frame");
    for (std::size_t i = 0; i < n; ++i)
      TESSELLA_REQUIRE(b.lo[i] < b.hi[i], ErrorCode::InvalidInput, "box has an empty side");
  }
}

FrameRegion FrameRegion::unit_box(RMatrix frame) {
  const auto n = static_cast<std::size_t>(frame.rows());
  Box b{std::vector<Rational>(n, Rational(0)), std::vector<Rational>(n, Rational(1))};
  return FrameRegion(std::move(frame), {std::move(b)});
}

Rational FrameRegion::measure() const {
  Rational total(0);
  for (const Box& b : boxes_) total += b.volume();
  return total * frame_volume_;
}

bool FrameRegion::contains(const RVector& point) const {
  const RVector y = to_frame(point);
  return std::any_of(boxes_.begin(), boxes_.end(), [&](const Box& b) { return b.contains(y); });
}

StepFunction::StepFunction(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (const Term& t : terms_) {
    TESSELLA_REQUIRE(t.coefficient >= 0, ErrorCode::InvalidInput,
                     "step function coefficients must be nonnegative");
    TESSELLA_REQUIRE(t.region.frame() == terms_.front().region.frame(), ErrorCode::InvalidInput,
                     "step function terms must share a frame");
  }
}

Rational MultiplicityMap::measure(std::uint64_t m) const {
  const auto it = levels.find(m);
  if (it == levels.end()) return Rational(0);
  return it->second.measure() / Rational(fold);
}

FrameRegion fundamental_parallelepiped(const EucLattice& l) {
  return FrameRegion::unit_box(l.basis());
}

Rational intersection_measure(const FrameRegion& a, const FrameRegion& b) {
  TESSELLA_REQUIRE(a.frame() == b.frame(), ErrorCode::InvalidInput,
                   "regions must share a frame");
  Rational total(0);
  for (const Box& x : a.boxes())
    for (const Box& y : b.boxes())
      if (auto z = intersect(x, y)) total += z->volume();
  return total * a.frame_volume();
}

namespace {

// L in frame coordinates: a diagonal sublattice prod period_i Z and coset
// representatives of L modulo it, all inside the period box.
struct Periods {
  std::vector<Rational> period;
  std::vector<RVector> reps;
};

Periods periods_in_frame(const FrameRegion& r, const EucLattice& l) {
  TESSELLA_REQUIRE(r.dim() == l.dim(), ErrorCode::InvalidInput,
                   "region and lattice dimensions differ");
  const Eigen::Index n = l.dim();
  RMatrix rel(n, n);
  for (Eigen::Index j = 0; j < n; ++j) rel.col(j) = r.to_frame(l.basis().col(j));
  const RMatrix h = linalg::hermite_basis(rel);
  const RMatrix h_inv = *linalg::inverse(h);

  Periods out;
  for (Eigen::Index i = 0; i < n; ++i) {
    // Least t > 0 with t * h_inv e_i integral.
    const RMatrix u = h_inv.col(i);
    const Integer d = common_denominator(u);
    Integer g(0);
    for (Eigen::Index j = 0; j < n; ++j) g = gcd(g, numer(u(j, 0) * Rational(d)));
    out.period.push_back(Rational(d, g));
  }

  RVector point = RVector::Zero(n);
  std::function<void(Eigen::Index)> walk = [&](Eigen::Index i) {
    if (i == n) {
      out.reps.push_back(point);
      return;
    }
    const Rational base = point(i);
    const Integer first = ceil(-base / h(i, i));
    const Integer last = ceil((out.period[i] - base) / h(i, i));
    for (Integer c = first; c < last; ++c) {
      const RVector saved = point;
      point += h.col(i) * Rational(c);
      walk(i + 1);
      point = saved;
    }
  };
  walk(0);
  return out;
}

// Pieces of [a, b) folded into [0, t).
std::vector<std::pair<Rational, Rational>> wrap_interval(const Rational& a, const Rational& b,
                                                         const Rational& t) {
  std::vector<std::pair<Rational, Rational>> out;
  for (Integer k = floor(a / t); Rational(k) * t < b; ++k) {
    const Rational shift = Rational(k) * t;
    const Rational lo = std::max(a, shift) - shift;
    const Rational hi = std::min(b, shift + t) - shift;
    if (lo < hi) out.emplace_back(lo, hi);
  }
  return out;
}

template <typename W>
struct Grid {
  std::vector<std::vector<Rational>> cuts;
  std::vector<std::size_t> extent;  // cells per axis
  std::vector<W> values;            // lexicographic, last axis fastest

  std::size_t cell_count() const { return values.size(); }

  Box cell(std::size_t index) const {
    const std::size_t n = extent.size();
    Box b{std::vector<Rational>(n), std::vector<Rational>(n)};
    for (std::size_t i = n; i-- > 0;) {
      const std::size_t k = index % extent[i];
      index /= extent[i];
      b.lo[i] = cuts[i][k];
      b.hi[i] = cuts[i][k + 1];
    }
    return b;
  }
};

template <typename W>
struct WeightedRegion {
  const FrameRegion* region;
  W weight;
};

template <typename W>
Grid<W> periodize(const std::vector<WeightedRegion<W>>& parts, const Periods& p) {
  const std::size_t n = p.period.size();
  std::vector<std::pair<Box, W>> boxes;
  for (const auto& part : parts)
    for (const Box& b : part.region->boxes())
      for (const RVector& rep : p.reps) {
        const Box moved = translate(b, rep);
        std::vector<std::vector<std::pair<Rational, Rational>>> pieces(n);
        for (std::size_t i = 0; i < n; ++i)
          pieces[i] = wrap_interval(moved.lo[i], moved.hi[i], p.period[i]);
        std::vector<std::size_t> pick(n, 0);
        while (true) {
          Box w{std::vector<Rational>(n), std::vector<Rational>(n)};
          for (std::size_t i = 0; i < n; ++i) std::tie(w.lo[i], w.hi[i]) = pieces[i][pick[i]];
          boxes.emplace_back(std::move(w), part.weight);
          std::size_t i = n;
          while (i-- > 0) {
            if (++pick[i] < pieces[i].size()) break;
            pick[i] = 0;
          }
          if (i == static_cast<std::size_t>(-1)) break;
        }
      }

  Grid<W> grid;
  grid.cuts.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& c = grid.cuts[i];
    c = {Rational(0), p.period[i]};
    for (const auto& [b, w] : boxes) {
      c.push_back(b.lo[i]);
      c.push_back(b.hi[i]);
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    grid.extent.push_back(c.size() - 1);
  }

  // Difference array over (extent_i + 1) nodes per axis.
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t i = n - 1; i-- > 0;) stride[i] = stride[i + 1] * (grid.extent[i + 1] + 1);
  const std::size_t nodes = stride[0] * (grid.extent[0] + 1);
  std::vector<W> diff(nodes, W(0));
  for (const auto& [b, w] : boxes) {
    std::vector<std::size_t> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& c = grid.cuts[i];
      lo[i] = std::lower_bound(c.begin(), c.end(), b.lo[i]) - c.begin();
      hi[i] = std::lower_bound(c.begin(), c.end(), b.hi[i]) - c.begin();
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::size_t at = 0;
      bool negative = false;
      for (std::size_t i = 0; i < n; ++i) {
        const bool upper = (mask >> i) & 1;
        at += (upper ? hi[i] : lo[i]) * stride[i];
        negative ^= upper;
      }
      if (negative)
        diff[at] -= w;
      else
        diff[at] += w;
    }
  }
  for (std::size_t axis = 0; axis < n; ++axis)
    for (std::size_t at = 0; at < nodes; ++at) {
      const std::size_t k = (at / stride[axis]) % (grid.extent[axis] + 1);
      if (k > 0) diff[at] += diff[at - stride[axis]];
    }

  std::size_t cells = 1;
  for (std::size_t e : grid.extent) cells *= e;
  grid.values.reserve(cells);
  for (std::size_t index = 0; index < cells; ++index) {
    std::size_t rest = index, at = 0;
    for (std::size_t i = n; i-- > 0;) {
      at += (rest % grid.extent[i]) * stride[i];
      rest /= grid.extent[i];
    }
    grid.values.push_back(diff[at]);
  }
  return grid;
}

Grid<std::int64_t> coverage(const FrameRegion& r, const Periods& p) {
  return periodize<std::int64_t>({{&r, 1}}, p);
}

TilingVerdict verdict_from(const FrameRegion& r, const Grid<std::int64_t>& grid,
                           const std::function<bool(std::int64_t)>& good) {
  for (std::size_t i = 0; i < grid.cell_count(); ++i)
    if (!good(grid.values[i]))
      return {false, r.from_frame(grid.cell(i).center()),
              static_cast<std::uint64_t>(grid.values[i])};
  return {true, std::nullopt, 0};
}

}  // namespace

MultiplicityMap region_reduce_mod(const FrameRegion& r, const EucLattice& l) {
  const Periods p = periods_in_frame(r, l);
  const auto grid = coverage(r, p);
  std::map<std::uint64_t, std::vector<Box>> cells;
  // Merge runs of equal multiplicity along the last axis.
  const std::size_t run = grid.extent.back();
  for (std::size_t row = 0; row < grid.cell_count(); row += run) {
    std::size_t k = 0;
    while (k < run) {
      std::size_t end = k + 1;
      while (end < run && grid.values[row + end] == grid.values[row + k]) ++end;
      Box b = grid.cell(row + k);
      b.hi.back() = grid.cell(row + end - 1).hi.back();
      cells[static_cast<std::uint64_t>(grid.values[row + k])].push_back(std::move(b));
      k = end;
    }
  }
  MultiplicityMap out{r.frame(), p.period, Integer(p.reps.size()), {}};
  for (auto& [m, boxes] : cells)
    out.levels.emplace(m, FrameRegion(r.frame(), std::move(boxes), FrameRegion::Trusted{}));
  return out;
}

TilingVerdict verify_tiling_exact(const FrameRegion& r, const EucLattice& l) {
  return verdict_from(r, coverage(r, periods_in_frame(r, l)),
                      [](std::int64_t m) { return m == 1; });
}

TilingVerdict verify_packing_exact(const FrameRegion& r, const EucLattice& l) {
  return verdict_from(r, coverage(r, periods_in_frame(r, l)),
                      [](std::int64_t m) { return m <= 1; });
}

bool function_tiling_check(const StepFunction& f, const EucLattice& l) {
  if (f.terms().empty()) return false;
  const Periods p = periods_in_frame(f.terms().front().region, l);
  std::vector<WeightedRegion<Rational>> parts;
  for (const auto& t : f.terms()) parts.push_back({&t.region, t.coefficient});
  const auto grid = periodize(parts, p);
  return std::all_of(grid.values.begin(), grid.values.end(),
                     [](const Rational& v) { return v == 1; });
}

}  // namespace tessella::euclid
