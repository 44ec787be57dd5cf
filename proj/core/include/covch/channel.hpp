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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "covch/spectral.hpp"

namespace covch {

/// Everything about a (group, irrep) pair that does not depend on the
/// channel parameters: commutant basis, M matrix and the Choi images of the
/// projectors. Immutable and shareable between channels.
class ChannelSpace {
 public:
  /// Throws NotSimplyReducible if the irrep's adjoint square has
  /// multiplicities.
  static std::shared_ptr<const ChannelSpace> create(IrrepCatalog catalog,
                                                    std::string_view irrep);

  const IrrepCatalog& catalog() const noexcept { return catalog_; }
  const FiniteGroup& group() const noexcept { return catalog_.group(); }
  const Irrep& irrep() const noexcept { return basis_->irrep(); }
  std::size_t dim() const noexcept { return basis_->dim(); }
  const CommutantBasis& basis() const noexcept { return *basis_; }
  const ThetaSet& theta() const noexcept { return basis_->theta(); }
  const MuMatrix& mu() const noexcept { return mu_; }
  /// J(Pi^alpha) for the Theta member at `pos`.
  const Matrix& choi_block(std::size_t pos) const { return choi_blocks_[pos]; }

  EigenvalueVector eigenvalues(
      const std::map<std::string, double>& values) const {
    return make_eigenvalues(catalog_, theta(), values);
  }

 private:
  ChannelSpace(IrrepCatalog catalog, std::string_view irrep);

  IrrepCatalog catalog_;
  std::unique_ptr<CommutantBasis> basis_;
  MuMatrix mu_;
  std::vector<Matrix> choi_blocks_;
};

using SpacePtr = std::shared_ptr<const ChannelSpace>;

struct KrausOperator {
  EpsilonKey key;
  double epsilon = 0.0;
  Matrix k;  // sqrt(epsilon) V_i^beta
};

/// A validated irreducibly covariant quantum channel.
class CovariantChannel {
 public:
  const SpacePtr& space() const noexcept { return space_; }
  const EigenvalueVector& eigenvalues() const noexcept { return l_; }
  const EpsilonVector& epsilons() const noexcept { return e_; }
  /// n^2 x n^2 matrix acting on row-major vectorizations.
  const Matrix& superoperator() const noexcept { return superop_; }
  const Matrix& choi() const noexcept { return choi_; }
  const std::vector<KrausOperator>& kraus() const noexcept { return kraus_; }
  std::size_t dim() const noexcept { return space_->dim(); }

  /// Kraus form sum K rho K^+. Throws DomainError unless rho is a density
  /// matrix.
  Matrix apply(const Matrix& rho) const;
  /// devectorize(mat(Phi) vectorize(x)) for any n x n matrix.
  Matrix apply_superoperator(const Matrix& x) const;
  /// sum K x K^+ without validating x.
  Matrix apply_kraus(const Matrix& x) const;

 private:
  friend CovariantChannel build_channel(SpacePtr, EigenvalueVector);

  SpacePtr space_;
  EigenvalueVector l_;
  EpsilonVector e_;
  Matrix superop_;
  Matrix choi_;
  std::vector<KrausOperator> kraus_;
};

/// Throws NotTracePreserving if |l_id - 1| exceeds the equality tolerance and
/// NotCompletelyPositive (first offending entry) if some epsilon is below
/// -kZeroTolerance.
CovariantChannel build_channel(SpacePtr space, EigenvalueVector l);
CovariantChannel build_channel(SpacePtr space,
                               const std::map<std::string, double>& l);

/// Channel with l_alpha(Phi) l_alpha(Psi); both must share a space.
CovariantChannel compose(const CovariantChannel& phi,
                         const CovariantChannel& psi);

/// Throws DomainError unless rho is square, Hermitian, PSD within
/// kZeroTolerance and of unit trace within the equality tolerance.
void validate_density_matrix(const Matrix& rho, std::size_t n);

/// Transpose on the second tensor factor of an (n*m) x (n*m) matrix.
Matrix partial_transpose(const Matrix& j, std::size_t n, std::size_t m);

enum class EbStatus {
  kEntanglementBreaking,
  kNotEntanglementBreaking,
  /// PPT holds for n >= 3, which is only necessary for entanglement breaking.
  kPptOnly,
};

struct EbVerdict {
  EbStatus status = EbStatus::kNotEntanglementBreaking;
  bool ppt = false;
  bool certified = false;  // true when the verdict is exact (n = 2)
  double min_pt_eigenvalue = 0.0;
};

/// Minimum eigenvalue of the partial transpose of J(Phi) built from l; l
/// need not describe a valid channel.
double min_partial_transpose_eigenvalue(const ChannelSpace& space,
                                        const EigenvalueVector& l);

EbVerdict classify_entanglement_breaking(const CovariantChannel& ch);

/// Real function on group elements; only its class sums are constrained.
struct ClassFunction {
  std::vector<double> values;
};

/// Throws DomainError on a size mismatch, NormalizationError if the values
/// do not sum to |G| and ClassSumNegative for a class with a negative sum.
void validate_class_function(const FiniteGroup& group, const ClassFunction& f);

/// l_gamma = (1/|G|)(1/|gamma|) sum_g chi^gamma(g) f(g) for every catalog
/// irrep, in catalog order.
RealVector class_function_eigenvalues(const IrrepCatalog& catalog,
                                      const ClassFunction& f);

/// Validates f, restricts its eigenvalues to Theta and builds the channel.
/// A CP failure here is reported as InternalError.
CovariantChannel channel_from_class_function(SpacePtr space,
                                             const ClassFunction& f);

/// Character matrix T (t_{g,gamma} = chi^gamma(g^-1)) and D = diag(|gamma|)
/// with rows in class-grouped element order.
struct CharacterMatrices {
  std::vector<Element> order;  // row k holds element order[k]
  Matrix t;
  RealMatrix d;
};

CharacterMatrices character_matrices(const IrrepCatalog& catalog);

/// x(g) as the class average of f; cross-checked against (1/|G|) T T^+ F
/// (InternalError on disagreement beyond 1e-12 relative).
RealVector x_coefficients(const IrrepCatalog& catalog, const ClassFunction& f);

/// The matrix route (1/|G|) T T^+ F alone, in element order.
RealVector x_coefficients_matrix(const IrrepCatalog& catalog,
                                 const ClassFunction& f);

}  // namespace covch
