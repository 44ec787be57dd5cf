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
#include <string>
#include <vector>

#include "covch/irrep.hpp"
#include "covch/linalg.hpp"

namespace covch {

/// Row-major stacking: vectorize(E_ij) = |i> (x) |j>.
Vector vectorize(const Matrix& x);

/// Inverse of vectorize. Throws DomainError unless the length is a square.
Matrix devectorize(const Vector& v);

/// mat(Ad_U(g)) = U(g) (x) conj(U(g)).
Matrix adjoint_matrix(const Irrep& u, Element g);

/// (|alpha|/|G|) sum_g chi^alpha(g^-1) U(g) (x) conj(U(g)). Zero when alpha
/// does not occur in U (x) U^c.
Matrix projector_coarse(const Irrep& u, const Irrep& alpha);

/// Rank-one part of the coarse projector weighted by phi^alpha_ii; `i` is
/// zero-based.
Matrix projector_fine(const Irrep& u, const Irrep& alpha, std::size_t i);

/// Unnormalized eigenmatrix sum
/// (|alpha|/|G|) sum_g phi^alpha_ii(g^-1) U_col(s)(g) U_row(t)(g^-1).
Matrix eigenmatrix_raw(const Irrep& u, const Irrep& alpha, std::size_t i,
                       std::size_t s, std::size_t t);

struct Eigenmatrix {
  Matrix v;           // Hilbert-Schmidt normalized
  std::size_t s = 0;  // chosen column index (zero-based)
  std::size_t t = 0;  // chosen row index (zero-based)
};

/// Normalized eigenmatrix for the lexicographically first (s,t) whose
/// diagonal entry of the fine projector exceeds kZeroTolerance. Throws
/// InternalError if there is none.
Eigenmatrix eigenmatrix_v(const Irrep& u, const Irrep& alpha, std::size_t i);

/// Max over g of the operator norm of [phi_mat, U(g) (x) conj(U(g))].
double covariance_residual(const Matrix& phi_mat, const Irrep& u);

/// Commutant data of Int_G(U (x) U^c) for a multiplicity-free U.
///
/// Entries are ordered by Theta (registry order, identity first) and then by
/// i; there are exactly n^2 of them. Built once, immutable afterwards.
class CommutantBasis {
 public:
  struct Entry {
    std::size_t theta_pos = 0;  // position of beta inside Theta
    std::string label;          // beta
    std::size_t i = 0;          // zero-based
    Matrix proj_fine;           // n^2 x n^2 rank-one projector
    Eigenmatrix eigen;          // V_i^beta with its (s,t)
    Vector basis_vector;        // |v_i^beta> = vectorize(V^T)
  };

  /// Throws NotSimplyReducible if U (x) U^c has multiplicities.
  CommutantBasis(const IrrepCatalog& catalog, const Irrep& u);

  const Irrep& irrep() const noexcept { return u_; }
  std::size_t dim() const noexcept { return u_.dim(); }
  const ThetaSet& theta() const noexcept { return theta_; }
  /// Irrep object of the Theta member at `pos`.
  const Irrep& theta_irrep(std::size_t pos) const { return theta_irreps_[pos]; }
  const Matrix& projector(std::size_t pos) const { return proj_[pos]; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

 private:
  Irrep u_;
  ThetaSet theta_;
  std::vector<Irrep> theta_irreps_;
  std::vector<Matrix> proj_;
  std::vector<Entry> entries_;
};

/// All |v_i^beta>, in entry order.
std::vector<Vector> basis_vectors(const CommutantBasis& basis);

}  // namespace covch
