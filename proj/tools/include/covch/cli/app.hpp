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

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "covch/error.hpp"

namespace covch::cli {

/// Malformed command line; maps to exit code 2.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message) : Error("USAGE", message) {}
};

/// Runs one invocation. `args` excludes the program name. Writes exactly one
/// JSON envelope (or CSV, or help text) to `out` and returns the exit code:
/// 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out);

/// "a=0.5,b=-1" into a map. Keys may contain commas, e.g. "2,1=0.3" or
/// "(2,1)=0.3": a fragment without '=' is joined to the next one.
std::map<std::string, double> parse_assignments(const std::string& text);

/// "1,2.5,-3" into numbers.
std::vector<double> parse_values(const std::string& text);

}  // namespace covch::cli
