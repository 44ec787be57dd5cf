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

#include <nlohmann/json.hpp>
#include <string>

#include "covch/linalg.hpp"

namespace covch::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// Rounded to 15 significant digits; negative zero becomes 0.
double round15(double v);

Json number(double v);
/// [re, im]
Json complex_json(Complex z);
/// Row-major nested arrays of [re, im] pairs.
Json matrix_json(const Matrix& m);
Json real_matrix_json(const RealMatrix& m);

Json envelope(const std::string& command, Json payload, Json diagnostics);
Json error_envelope(const std::string& command, Json diagnostics);
Json diagnostic(const std::string& severity, const std::string& code,
                const std::string& message);

}  // namespace covch::cli
