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
#include "tessella/heisenberg/montecarlo.hpp"

#include "tessella/error.hpp"

#include <cmath>
#include <thread>

namespace tessella::heisenberg {

namespace {

Where classify_unit(const std::array<Rational, 3>& t) {
  bool boundary = false;
  for (const Rational& v : t) {
    if (v < 0 || v > 1) return Where::Outside;
    if (v == 0 || v == 1) boundary = true;
  }
  return boundary ? Where::Boundary : Where::Inside;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr int kDyadicBits = 24;

Point draw(const Window& w, std::uint64_t seed, std::uint64_t index, std::uint64_t attempt) {
  std::uint64_t state = splitmix64(splitmix64(seed ^ splitmix64(index)) + attempt);
  std::array<Rational, 3> out;
  for (int i = 0; i < 3; ++i) {
    state = splitmix64(state);
    const Rational k(static_cast<long>(state >> (64 - kDyadicBits)));
    out[i] = w.lo[i] + (w.hi[i] - w.lo[i]) * k / Rational(1L << kDyadicBits);
  }
  return {out[0], out[1], out[2]};
}

}  // namespace

Candidate unit_chart_candidate(Chart chart, ApproxChart approx, const std::array<Rational, 3>& lo,
                               const std::array<Rational, 3>& hi) {
  auto contains = [chart](const Point& g) {
    const auto t = chart(g);
    for (const Rational& v : t)
      if (v < 0 || v >= 1) return false;
    return true;
  };
  auto classify = [chart](const Point& g) { return classify_unit(chart(g)); };
  return {contains, classify, lo, hi, std::move(approx)};
}

Candidate malcev_cell(const HeisLattice& l) {
  const auto& a = l.matrix();
  std::array<Rational, 3> lo{0, 0, 0}, hi{0, 0, 1};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (a(i, j) < 0) lo[i] += a(i, j);
      if (a(i, j) > 0) hi[i] += a(i, j);
    }
  const double d = to_double(l.det());
  const double i00 = to_double(a(1, 1)) / d, i01 = -to_double(a(0, 1)) / d;
  const double i10 = -to_double(a(1, 0)) / d, i11 = to_double(a(0, 0)) / d;
  return unit_chart_candidate(
      [l](const Point& g) {
        const auto t = l.frame_coordinates(g);
        return std::array<Rational, 3>{t[0], t[1], g.c};
      },
      [=](const std::array<double, 3>& x) {
        return std::array<double, 3>{i00 * x[0] + i01 * x[1], i10 * x[0] + i11 * x[1], x[2]};
      },
      lo, hi);
}

Candidate box_candidate(const std::array<Rational, 3>& lo, const std::array<Rational, 3>& hi) {
  for (int i = 0; i < 3; ++i)
    TESSELLA_REQUIRE(lo[i] < hi[i], ErrorCode::InvalidInput, "candidate box has an empty side");
  std::array<double, 3> dlo, dw;
  for (int i = 0; i < 3; ++i) {
    dlo[i] = to_double(lo[i]);
    dw[i] = to_double(hi[i] - lo[i]);
  }
  return unit_chart_candidate(
      [lo, hi](const Point& g) {
        const std::array<Rational, 3> x{g.x1, g.x2, g.c};
        std::array<Rational, 3> t;
        for (int i = 0; i < 3; ++i) t[i] = (x[i] - lo[i]) / (hi[i] - lo[i]);
        return t;
      },
      [=](const std::array<double, 3>& x) {
        return std::array<double, 3>{(x[0] - dlo[0]) / dw[0], (x[1] - dlo[1]) / dw[1],
                                     (x[2] - dlo[2]) / dw[2]};
      },
      lo, hi);
}

Candidate psi_image_of_cube() {
  return unit_chart_candidate(
      [](const Point& g) {
        const Vec v = heis_log(g);
        return std::array<Rational, 3>{v.u1, v.u2, v.u3};
      },
      [](const std::array<double, 3>& x) {
        return std::array<double, 3>{x[0], x[1], x[2] - 2 * x[0] * x[1]};
      },
      {Rational(0), Rational(0), Rational(0)}, {Rational(1), Rational(1), Rational(3)});
}

bool Histogram::all_one() const {
  return counts.size() == 1 && counts.begin()->first == 1 && counts.begin()->second == samples;
}

std::optional<std::uint64_t> multiplicity_at(const Candidate& cand, ActionSide side,
                                             const HeisLattice& l, const Point& p) {
  // Floating-point pass over a padded range; exact arithmetic decides every
  // translate that is not clearly outside.
  constexpr double kMargin = 1e-6;
  const auto& a = l.matrix();
  const double a00 = to_double(a(0, 0)), a01 = to_double(a(0, 1));
  const double a10 = to_double(a(1, 0)), a11 = to_double(a(1, 1));
  const double det = to_double(l.det());
  const double p1 = to_double(p.x1), p2 = to_double(p.x2), pc = to_double(p.c);
  std::array<double, 3> lo, hi;
  for (int i = 0; i < 3; ++i) {
    lo[i] = to_double(cand.lo[i]);
    hi[i] = to_double(cand.hi[i]);
  }
  // Planar: A n = p_x - w_x with w_x in the candidate's box.
  const double m1 = p1 - (lo[0] + hi[0]) / 2, m2 = p2 - (lo[1] + hi[1]) / 2;
  const double h1 = (hi[0] - lo[0]) / 2, h2 = (hi[1] - lo[1]) / 2;
  const double c1 = (a11 * m1 - a01 * m2) / det, c2 = (-a10 * m1 + a00 * m2) / det;
  const double s1 = (std::abs(a11) * h1 + std::abs(a01) * h2) / std::abs(det);
  const double s2 = (std::abs(a10) * h1 + std::abs(a00) * h2) / std::abs(det);

  std::uint64_t count = 0;
  for (long n1 = std::lround(std::floor(c1 - s1)) - 1; n1 <= std::lround(std::ceil(c1 + s1)) + 1;
       ++n1)
    for (long n2 = std::lround(std::floor(c2 - s2)) - 1;
         n2 <= std::lround(std::ceil(c2 + s2)) + 1; ++n2) {
      const double g1 = a00 * n1 + a01 * n2, g2 = a10 * n1 + a11 * n2;
      const double gc = static_cast<double>(n1) * static_cast<double>(n2) * det;
      // Quotient (gamma^-1 p or p gamma^-1) at m = 0; its centre drops by m.
      const double cross = side == ActionSide::Left ? g1 * p2 - g2 * p1 : p1 * g2 - p2 * g1;
      const std::array<double, 3> q0{p1 - g1, p2 - g2, pc - gc - cross};
      for (long m = std::lround(std::floor(q0[2] - hi[2])) - 1;
           m <= std::lround(std::ceil(q0[2] - lo[2])) + 1; ++m) {
        if (cand.approx) {
          const auto t = cand.approx({q0[0], q0[1], q0[2] - static_cast<double>(m)});
          if (t[0] < -kMargin || t[0] > 1 + kMargin || t[1] < -kMargin || t[1] > 1 + kMargin ||
              t[2] < -kMargin || t[2] > 1 + kMargin)
            continue;
        }
        const Point gamma = l.element(n1, n2, m);
        const Point q = side == ActionSide::Left ? heis_inv(gamma) * p : p * heis_inv(gamma);
        switch (cand.classify(q)) {
          case Where::Inside:
            ++count;
            break;
          case Where::Boundary:
            return std::nullopt;
          case Where::Outside:
            break;
        }
      }
    }
  return count;
}

Histogram mc_verify_tiling(const Candidate& candidate, ActionSide side, const HeisLattice& l,
                           const Window& window, const SamplingOptions& options) {
  for (int i = 0; i < 3; ++i)
    TESSELLA_REQUIRE(window.lo[i] < window.hi[i], ErrorCode::WindowTooSmall,
                     "sampling window has an empty side");
  TESSELLA_REQUIRE(options.samples > 0, ErrorCode::InvalidInput, "sample count must be positive");
  const unsigned threads = std::max(1u, options.threads);

  struct Shard {
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t resampled = 0;
    std::exception_ptr error;
  };
  std::vector<Shard> shards(threads);
  auto work = [&](unsigned shard) {
    try {
      for (std::uint64_t i = shard; i < options.samples; i += threads) {
        for (std::uint64_t attempt = 0;; ++attempt) {
          const auto m = multiplicity_at(candidate, side, l, draw(window, options.seed, i, attempt));
          if (m) {
            ++shards[shard].counts[*m];
            break;
          }
          ++shards[shard].resampled;
        }
      }
    } catch (...) {
      shards[shard].error = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& t : pool) t.join();
  }

  Histogram out;
  out.samples = options.samples;
  out.seed = options.seed;
  for (const auto& s : shards) {
    if (s.error) std::rethrow_exception(s.error);
    for (const auto& [m, c] : s.counts) out.counts[m] += c;
    out.resampled += s.resampled;
  }
  return out;
}

Histogram psi_image_domain_check(const SamplingOptions& options) {
  const Window w{{Rational(-2), Rational(-2), Rational(-4)}, {Rational(2), Rational(2), Rational(4)}};
  return mc_verify_tiling(psi_image_of_cube(), ActionSide::Right, HeisLattice::standard(), w,
                          options);
}

}  // namespace tessella::heisenberg
