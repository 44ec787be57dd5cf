// Copyright 2026 The covch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "covch/channel.hpp"

namespace covch::cli {

inline constexpr double kGridLow = -1.25;
inline constexpr double kGridHigh = 1.25;

/// n >= 2 points lo + (hi - lo) k / (n - 1), endpoints exact.
std::vector<double> grid_axis(std::size_t n, double lo = kGridLow,
                              double hi = kGridHigh);

struct RegionPoint {
  std::vector<double> coords;  // one per non-identity Theta member
  bool cptp = false;
  std::optional<bool> eb;  // empty for |U| > 2
};

struct FeasibleRegion {
  std::vector<std::string> axes;  // Theta members without id
  std::vector<RegionPoint> points;
};

/// Uniform grid over [-1.25, 1.25]^(|Theta|-1), row-major with the first
/// axis slowest. EB flags are PPT verdicts and only reported for |U| = 2;
/// non-CPTP points carry eb = 0. Throws DomainError for more than three free
/// parameters or n < 2.
FeasibleRegion feasible_region(const ChannelSpace& space, std::size_t n);

/// CSV column name for an irrep label: "(2,1)" becomes "l_2_1".
std::string column_name(const std::string& label);

/// %.15g with negative zero printed as 0.
std::string format_number(double v);

void write_region_csv(const FeasibleRegion& region, std::ostream& out);

}  // namespace covch::cli
