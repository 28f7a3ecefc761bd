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

// Plot files. Coordinates are the only place exact values get rounded.
#pragma once

#include "tessella/euclid/region.hpp"

#include <string>
#include <vector>

namespace tessella::io {

/// Decimal text of x rounded to 1e-6, trailing zeros dropped.
std::string format_coordinate(double x);

/// 2-D regions at 1 unit = 100 px with the y axis pointing up.
std::string region_svg(const std::vector<euclid::FrameRegion>& regions);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Polyline plot scaled into a fixed 640x400 canvas.
std::string line_plot_svg(const std::string& title, const Series& series);

/// Comma separated; cells are written verbatim.
std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

}  // namespace tessella::io
