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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covch/commutant.hpp"

namespace covch {

/// Channel eigenvalues l_alpha keyed by the members of Theta (identity first).
struct EigenvalueVector {
  std::vector<std::string> labels;
  RealVector values;

  std::size_t size() const noexcept { return labels.size(); }
  double at(const std::string& label) const;
  double identity() const { return values(0); }
};

/// Eigenvalue vector over Theta filled from a label map; missing non-identity
/// labels are an error, l_id defaults to 1. Keys go through the catalog's
/// alias resolution.
EigenvalueVector make_eigenvalues(const IrrepCatalog& catalog,
                                  const ThetaSet& theta,
                                  const std::map<std::string, double>& values);

struct EpsilonKey {
  std::string beta;
  std::size_t i = 0;  // zero-based
};

/// Choi eigenvalues epsilon_i^beta, n^2 entries in commutant-entry order.
struct EpsilonVector {
  std::vector<EpsilonKey> keys;
  RealVector values;

  std::size_t size() const noexcept { return keys.size(); }
  double sum() const { return values.sum(); }
};

/// mu_i(alpha, beta) = (|alpha|/|G|) sum_g chi^alpha(g^-1) |tr(V U(g)^+)|^2
/// for the eigenmatrix V = V_i^beta. alpha may be any irrep of the group.
double mu(const Irrep& u, const Irrep& alpha, const Matrix& v_beta_i);

/// Same value from the double group sum over (g,h) for an explicit
/// admissible (s,t); independent of the chosen pair.
double mu_double_sum(const Irrep& u, const Irrep& alpha, const Irrep& beta,
                     std::size_t i, std::size_t s, std::size_t t);

/// The n^2 x |Theta| real matrix M with E = M L, its Gram matrix and the
/// left inverse Gram^-1 M^T.
struct MuMatrix {
  RealMatrix m;
  RealMatrix gram;
  RealMatrix left_inv;
  std::vector<EpsilonKey> rows;
  std::vector<std::string> cols;
};

/// Throws InternalError if the Gram matrix is singular or the left inverse
/// fails to reproduce the identity.
MuMatrix mu_matrix(const CommutantBasis& basis);

EpsilonVector epsilon_from_L(const MuMatrix& m, const EigenvalueVector& l);

/// Throws NotInSubspace if E is not in the column space of M.
EigenvalueVector L_from_epsilon(const MuMatrix& m, const EpsilonVector& e);

/// Choi image sum_ij E_ij (x) Pi(E_ij) of the map with matrix representation
/// `superop` (an n^2 x n^2 matrix acting on row-major vectorizations).
Matrix choi_from_superoperator(const Matrix& superop);

/// J(Phi) = sum_alpha l_alpha J(Pi^alpha).
Matrix choi_image(const CommutantBasis& basis, const EigenvalueVector& l);

/// J(Phi) obtained by applying Phi to each E_ij through the raw
/// character-weighted congruence sum. Shares no code path with choi_image.
Matrix brute_force_choi(const IrrepCatalog& catalog, const Irrep& u,
                        const EigenvalueVector& l);

/// Choi eigenvalue of entry (beta, i) from the (g,h) double sum with an
/// explicit admissible (s,t).
double epsilon_double_sum(const CommutantBasis& basis,
                          const EigenvalueVector& l, std::size_t entry,
                          std::size_t s, std::size_t t);

struct SimplexVerdict {
  bool feasible = false;
  /// First entry below -kZeroTolerance, if any.
  std::optional<std::size_t> negative_entry;
  /// Set when the sum differs from |U| by more than the equality tolerance.
  std::optional<double> sum_mismatch;
};

SimplexVerdict simplex_feasibility(const EpsilonVector& e, std::size_t dim_u);

}  // namespace covch
