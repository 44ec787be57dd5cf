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

#include "covch/cli/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace covch::cli {

double round15(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v == 0.0 ? 0.0 : v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Json number(double v) { return round15(v); }

Json complex_json(Complex z) {
  return Json::array({round15(z.real()), round15(z.imag())});
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json real_matrix_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(round15(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json envelope(const std::string& command, Json payload, Json diagnostics) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = command;
  out["payload"] = std::move(payload);
  out["diagnostics"] = std::move(diagnostics);
  return out;
}

Json error_envelope(const std::string& command, Json diagnostics) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = command;
  out["diagnostics"] = std::move(diagnostics);
  return out;
}

Json diagnostic(const std::string& severity, const std::string& code,
                const std::string& message) {
  Json d;
  d["severity"] = severity;
  d["code"] = code;
  d["message"] = message;
  return d;
}

}  // namespace covch::cli
