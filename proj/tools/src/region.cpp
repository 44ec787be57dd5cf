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

#include "covch/cli/region.hpp"

#include <cstdio>

#include "covch/error.hpp"
#include "covch/tolerance.hpp"

namespace covch::cli {

std::vector<double> grid_axis(std::size_t n, double lo, double hi) {
  if (n < 2) throw DomainError("grid needs at least 2 points per axis");
  std::vector<double> axis(n);
  for (std::size_t k = 0; k < n; ++k)
    axis[k] = lo + (hi - lo) * static_cast<double>(k) /
                       static_cast<double>(n - 1);
  axis.back() = hi;
  return axis;
}

FeasibleRegion feasible_region(const ChannelSpace& space, std::size_t n) {
  const ThetaSet& theta = space.theta();
  const std::size_t free = theta.size() - 1;
  if (free > 3)
    throw DomainError("feasible region supports at most 3 free parameters, " +
                      std::to_string(free) + " given");
  if (free == 0) throw DomainError("no free parameters");
  const std::vector<double> axis = grid_axis(n);

  FeasibleRegion region;
  region.axes.assign(theta.members.begin() + 1, theta.members.end());
  std::size_t total = 1;
  for (std::size_t k = 0; k < free; ++k) total *= n;
  region.points.reserve(total);

  EigenvalueVector l;
  l.labels = theta.members;
  l.values = RealVector::Ones(static_cast<Eigen::Index>(theta.size()));
  std::vector<std::size_t> idx(free, 0);
  for (std::size_t p = 0; p < total; ++p) {
    std::size_t rest = p;
    for (std::size_t k = free; k-- > 0;) {
      idx[k] = rest % n;
      rest /= n;
    }
    RegionPoint pt;
    for (std::size_t k = 0; k < free; ++k) {
      pt.coords.push_back(axis[idx[k]]);
      l.values(static_cast<Eigen::Index>(k + 1)) = axis[idx[k]];
    }
    const RealVector e = space.mu().m * l.values;
    pt.cptp = e.minCoeff() >= -kZeroTolerance;
    if (space.dim() == 2)
      pt.eb = pt.cptp &&
              min_partial_transpose_eigenvalue(space, l) >= -kZeroTolerance;
    region.points.push_back(std::move(pt));
  }
  return region;
}

std::string column_name(const std::string& label) {
  std::string out = "l_";
  for (char c : label) {
    if (c == '(' || c == ')' || c == ' ') continue;
    out += c == ',' ? '_' : c;
  }
  return out;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

void write_region_csv(const FeasibleRegion& region, std::ostream& out) {
  for (const auto& axis : region.axes) out << column_name(axis) << ',';
  out << "cptp,eb\n";
  for (const auto& pt : region.points) {
    for (double c : pt.coords) out << format_number(c) << ',';
    out << (pt.cptp ? '1' : '0') << ',';
    if (pt.eb)
      out << (*pt.eb ? "1" : "0");
    else
      out << "NA";
    out << '\n';
  }
}

}  // namespace covch::cli
