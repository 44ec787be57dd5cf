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

#include "covch/cli/sampling.hpp"

#include "covch/error.hpp"
#include "covch/tolerance.hpp"

namespace covch::cli {

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Matrix Sampler::complex_matrix(std::size_t n) {
  std::normal_distribution<double> normal;
  const auto ni = static_cast<Eigen::Index>(n);
  Matrix a(ni, ni);
  for (Eigen::Index i = 0; i < ni; ++i)
    for (Eigen::Index j = 0; j < ni; ++j)
      a(i, j) = Complex(normal(rng_), normal(rng_));
  return a;
}

Matrix Sampler::hermitian_matrix(std::size_t n) {
  const Matrix a = complex_matrix(n);
  return (a + a.adjoint()) / 2.0;
}

Matrix Sampler::density_matrix(std::size_t n) {
  const Matrix g = complex_matrix(n);
  const Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

std::vector<double> Sampler::simplex_point(std::size_t k, double total) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(k);
  double sum = 0.0;
  for (auto& v : p) sum += (v = expo(rng_));
  for (auto& v : p) v *= total / sum;
  return p;
}

EigenvalueVector Sampler::eigenvalues(const ThetaSet& theta, double lo,
                                      double hi) {
  EigenvalueVector l;
  l.labels = theta.members;
  l.values.resize(static_cast<Eigen::Index>(theta.size()));
  l.values(0) = 1.0;
  for (Eigen::Index k = 1; k < l.values.size(); ++k)
    l.values(k) = uniform(lo, hi);
  return l;
}

EigenvalueVector Sampler::feasible_eigenvalues(const ChannelSpace& space) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    EigenvalueVector l = eigenvalues(space.theta(), -1.0, 1.0);
    const RealVector e = space.mu().m * l.values;
    if (e.minCoeff() >= 0.0) return l;
  }
  throw InternalError("no feasible eigenvalue vector found");
}

ClassFunction Sampler::scaled_distribution(const FiniteGroup& group) {
  return {simplex_point(group.order(), static_cast<double>(group.order()))};
}

}  // namespace covch::cli
