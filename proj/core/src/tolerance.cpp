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

#include "covch/tolerance.hpp"

#include <atomic>

#include "covch/error.hpp"

namespace covch {
namespace {
std::atomic<double> g_equality_tolerance{kDefaultEqualityTolerance};
}  // namespace

double equality_tolerance() noexcept {
  return g_equality_tolerance.load(std::memory_order_relaxed);
}

void set_equality_tolerance(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  g_equality_tolerance.store(tol, std::memory_order_relaxed);
}

}  // namespace covch
