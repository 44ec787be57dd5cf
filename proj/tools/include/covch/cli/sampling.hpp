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

#include <cstdint>
#include <random>
#include <vector>

#include "covch/channel.hpp"

namespace covch::cli {

/// Seeded generators for randomized checks. Same seed, same stream.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  /// Entries with independent standard normal real and imaginary parts.
  Matrix complex_matrix(std::size_t n);
  /// Hermitian matrix (A + A^+)/2 of a complex Gaussian A.
  Matrix hermitian_matrix(std::size_t n);
  /// G G^+ / tr(G G^+) for a complex Gaussian G.
  Matrix density_matrix(std::size_t n);
  /// Uniform point of the probability simplex, scaled to sum to `total`.
  std::vector<double> simplex_point(std::size_t k, double total);
  /// l_id = 1, remaining entries uniform in [lo, hi].
  EigenvalueVector eigenvalues(const ThetaSet& theta, double lo, double hi);
  /// Rejection sample of a CPTP eigenvalue vector from [-1, 1]^(|Theta|-1).
  EigenvalueVector feasible_eigenvalues(const ChannelSpace& space);
  /// Probability distribution on G scaled by |G|.
  ClassFunction scaled_distribution(const FiniteGroup& group);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace covch::cli
