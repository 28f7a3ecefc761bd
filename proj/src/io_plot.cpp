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
#include "tessella/io/plot.hpp"

#include "tessella/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace tessella::io {

namespace {

constexpr double kScale = 100;
constexpr std::array<const char*, 6> kFills = {"#4e79a7", "#f28e2b", "#59a14f",
                                               "#e15759", "#b07aa1", "#76b7b2"};

}  // namespace

std::string format_coordinate(double x) {
  double r = std::round(x * 1e6) / 1e6;
  if (r == 0) r = 0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", r);
  std::string s(buf);
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string region_svg(const std::vector<euclid::FrameRegion>& regions) {
  double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
  double max_x = -min_x, max_y = -min_x;
  std::vector<std::vector<std::vector<std::array<double, 2>>>> polys;
  for (const auto& r : regions) {
    TESSELLA_REQUIRE(r.dim() == 2, ErrorCode::InvalidInput, "SVG output needs 2-D regions");
    auto& shapes = polys.emplace_back();
    for (const auto& b : r.boxes()) {
      auto& poly = shapes.emplace_back();
      const std::array<std::array<const Rational*, 2>, 4> corners = {
          {{&b.lo[0], &b.lo[1]}, {&b.hi[0], &b.lo[1]}, {&b.hi[0], &b.hi[1]}, {&b.lo[0], &b.hi[1]}}};
      for (const auto& c : corners) {
        RVector y(2);
        y << *c[0], *c[1];
        const RVector p = r.from_frame(y);
        const double px = to_double(p(0)) * kScale, py = -to_double(p(1)) * kScale;
        poly.push_back({px, py});
        min_x = std::min(min_x, px);
        max_x = std::max(max_x, px);
        min_y = std::min(min_y, py);
        max_y = std::max(max_y, py);
      }
    }
  }
  if (min_x > max_x) min_x = max_x = min_y = max_y = 0;
  const double pad = 10;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_coordinate(min_x - pad)
     << ' ' << format_coordinate(min_y - pad) << ' '
     << format_coordinate(max_x - min_x + 2 * pad) << ' '
     << format_coordinate(max_y - min_y + 2 * pad) << "\">\n";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    os << "  <g fill=\"" << kFills[i % kFills.size()]
       << "\" fill-opacity=\"0.6\" stroke=\"#222\" stroke-width=\"0.5\">\n";
    for (const auto& poly : polys[i]) {
      os << "    <polygon points=\"";
      for (std::size_t k = 0; k < poly.size(); ++k)
        os << (k ? " " : "") << format_coordinate(poly[k][0]) << ','
           << format_coordinate(poly[k][1]);
      os << "\"/>\n";
    }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string line_plot_svg(const std::string& title, const Series& series) {
  TESSELLA_REQUIRE(series.x.size() == series.y.size() && !series.x.empty(),
                   ErrorCode::InvalidInput, "series needs matching nonempty x and y");
  constexpr double width = 640, height = 400, margin = 40;
  const auto [x0, x1] = std::minmax_element(series.x.begin(), series.x.end());
  const auto [y0, y1] = std::minmax_element(series.y.begin(), series.y.end());
  const double sx = *x1 > *x0 ? (width - 2 * margin) / (*x1 - *x0) : 0;
  const double sy = *y1 > *y0 ? (height - 2 * margin) / (*y1 - *y0) : 0;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 400\">\n"
     << "  <text x=\"" << margin << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">"
     << title << "</text>\n"
     << "  <polyline fill=\"none\" stroke=\"#4e79a7\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < series.x.size(); ++i)
    os << (i ? " " : "") << format_coordinate(margin + (series.x[i] - *x0) * sx) << ','
       << format_coordinate(height - margin - (series.y[i] - *y0) * sy);
  os << "\"/>\n"
     << "  <text x=\"" << width - margin << "\" y=\"" << height - 12
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << series.label
     << "</text>\n</svg>\n";
  return os.str();
}

std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace tessella::io
