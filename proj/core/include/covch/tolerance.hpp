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

namespace covch {

/// Default absolute tolerance for numerical equalities.
inline constexpr double kDefaultEqualityTolerance = 1e-10;

/// One-sided slack used for "is nonnegative" and "is nonzero" decisions.
inline constexpr double kZeroTolerance = 1e-10;

/// Process-wide equality tolerance. Reads and writes are atomic; the CLI sets
/// it once at startup from COVCH_TOLERANCE.
double equality_tolerance() noexcept;
void set_equality_tolerance(double tol);

}  // namespace covch
