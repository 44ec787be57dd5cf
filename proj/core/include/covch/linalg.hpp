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

#include <complex>

#include <Eigen/Dense>

namespace covch {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// (A (x) B)_{(i,k),(j,l)} = A_ij B_kl with composite index i * dim(B) + k.
Matrix kron(const Matrix& a, const Matrix& b);

/// Largest singular value.
double operator_norm(const Matrix& a);

/// Largest entry modulus.
double max_abs(const Matrix& a);

/// Hermitian-part eigenvalues in ascending order.
RealVector hermitian_eigenvalues(const Matrix& a);

}  // namespace covch
