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

#include "covch/channel.hpp"

#include <algorithm>
#include <cmath>

#include "covch/error.hpp"
#include "covch/tolerance.hpp"

namespace covch {

ChannelSpace::ChannelSpace(IrrepCatalog catalog, std::string_view irrep)
    : catalog_(std::move(catalog)) {
  basis_ = std::make_unique<CommutantBasis>(catalog_, catalog_.at(irrep));
  mu_ = mu_matrix(*basis_);
  for (std::size_t pos = 0; pos < basis_->theta().size(); ++pos)
    choi_blocks_.push_back(choi_from_superoperator(basis_->projector(pos)));
}

std::shared_ptr<const ChannelSpace> ChannelSpace::create(
    IrrepCatalog catalog, std::string_view irrep) {
  return std::shared_ptr<const ChannelSpace>(
      new ChannelSpace(std::move(catalog), irrep));
}

Matrix CovariantChannel::apply(const Matrix& rho) const {
  validate_density_matrix(rho, dim());
  return apply_kraus(rho);
}

Matrix CovariantChannel::apply_superoperator(const Matrix& x) const {
  return devectorize(superop_ * vectorize(x));
}

Matrix CovariantChannel::apply_kraus(const Matrix& x) const {
  const auto n = static_cast<Eigen::Index>(dim());
  if (x.rows() != n || x.cols() != n)
    throw DomainError("input must be " + std::to_string(n) + "x" +
                      std::to_string(n));
  Matrix out = Matrix::Zero(n, n);
  for (const auto& op : kraus_) out += op.k * x * op.k.adjoint();
  return out;
}

CovariantChannel build_channel(SpacePtr space, EigenvalueVector l) {
  if (!space) throw DomainError("null channel space");
  if (l.labels != space->theta().members)
    throw DomainError("eigenvalues are not keyed by Theta");
  if (std::abs(l.identity() - 1.0) > equality_tolerance())
    throw NotTracePreserving(l.identity());

  EpsilonVector e = epsilon_from_L(space->mu(), l);
  for (Eigen::Index k = 0; k < e.values.size(); ++k) {
    if (e.values(k) < -kZeroTolerance) {
      const auto& key = e.keys[static_cast<std::size_t>(k)];
      throw NotCompletelyPositive(key.beta, static_cast<int>(key.i),
                                  e.values(k));
    }
  }

  CovariantChannel ch;
  const auto n2 = static_cast<Eigen::Index>(space->dim() * space->dim());
  ch.superop_ = Matrix::Zero(n2, n2);
  ch.choi_ = Matrix::Zero(n2, n2);
  for (std::size_t pos = 0; pos < l.size(); ++pos) {
    const double lv = l.values(static_cast<Eigen::Index>(pos));
    ch.superop_ += lv * space->basis().projector(pos);
    ch.choi_ += lv * space->choi_block(pos);
  }
  const auto& entries = space->basis().entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const double eps = e.values(static_cast<Eigen::Index>(k));
    if (eps <= kZeroTolerance) continue;
    ch.kraus_.push_back(
        {e.keys[k], eps, std::sqrt(eps) * entries[k].eigen.v});
  }
  ch.space_ = std::move(space);
  ch.l_ = std::move(l);
  ch.e_ = std::move(e);
  return ch;
}

CovariantChannel build_channel(SpacePtr space,
                               const std::map<std::string, double>& l) {
  EigenvalueVector values = space->eigenvalues(l);
  return build_channel(std::move(space), std::move(values));
}

CovariantChannel compose(const CovariantChannel& phi,
                         const CovariantChannel& psi) {
  if (phi.space() != psi.space())
    throw DomainError("channels act on different spaces");
  EigenvalueVector l = phi.eigenvalues();
  l.values = l.values.cwiseProduct(psi.eigenvalues().values);
  return build_channel(phi.space(), std::move(l));
}

void validate_density_matrix(const Matrix& rho, std::size_t n) {
  const auto ni = static_cast<Eigen::Index>(n);
  if (rho.rows() != ni || rho.cols() != ni)
    throw DomainError("density matrix must be " + std::to_string(n) + "x" +
                      std::to_string(n));
  if (max_abs(rho - rho.adjoint()) > equality_tolerance())
    throw DomainError("density matrix is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > equality_tolerance())
    throw DomainError("density matrix does not have unit trace");
  if (hermitian_eigenvalues(rho).minCoeff() < -kZeroTolerance)
    throw DomainError("density matrix is not positive semidefinite");
}

Matrix partial_transpose(const Matrix& j, std::size_t n, std::size_t m) {
  const auto ni = static_cast<Eigen::Index>(n);
  const auto mi = static_cast<Eigen::Index>(m);
  if (j.rows() != ni * mi || j.cols() != ni * mi)
    throw DomainError("partial_transpose: dimension mismatch");
  Matrix out(ni * mi, ni * mi);
  for (Eigen::Index a = 0; a < ni; ++a)
    for (Eigen::Index b = 0; b < ni; ++b)
      for (Eigen::Index c = 0; c < mi; ++c)
        for (Eigen::Index d = 0; d < mi; ++d)
          out(a * mi + c, b * mi + d) = j(a * mi + d, b * mi + c);
  return out;
}

double min_partial_transpose_eigenvalue(const ChannelSpace& space,
                                        const EigenvalueVector& l) {
  const auto n2 = static_cast<Eigen::Index>(space.dim() * space.dim());
  Matrix j = Matrix::Zero(n2, n2);
  for (std::size_t pos = 0; pos < l.size(); ++pos)
    j += l.values(static_cast<Eigen::Index>(pos)) * space.choi_block(pos);
  return hermitian_eigenvalues(partial_transpose(j, space.dim(), space.dim()))
      .minCoeff();
}

EbVerdict classify_entanglement_breaking(const CovariantChannel& ch) {
  EbVerdict v;
  v.min_pt_eigenvalue =
      hermitian_eigenvalues(partial_transpose(ch.choi(), ch.dim(), ch.dim()))
          .minCoeff();
  v.ppt = v.min_pt_eigenvalue >= -kZeroTolerance;
  v.certified = ch.dim() == 2;
  if (!v.ppt)
    v.status = EbStatus::kNotEntanglementBreaking;
  else if (v.certified)
    v.status = EbStatus::kEntanglementBreaking;
  else
    v.status = EbStatus::kPptOnly;
  return v;
}

void validate_class_function(const FiniteGroup& group,
                             const ClassFunction& f) {
  if (f.values.size() != group.order())
    throw DomainError("class function needs " + std::to_string(group.order()) +
                      " values, got " + std::to_string(f.values.size()));
  double total = 0.0;
  for (double v : f.values) {
    if (!std::isfinite(v)) throw DomainError("class function is not finite");
    total += v;
  }
  const double order = static_cast<double>(group.order());
  if (std::abs(total - order) > equality_tolerance() * order)
    throw NormalizationError("class function sums to " +
                             std::to_string(total) + ", expected " +
                             std::to_string(group.order()));
  const auto& classes = group.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    double sum = 0.0;
    for (Element g : classes[c]) sum += f.values[g];
    if (sum < -kZeroTolerance) throw ClassSumNegative(static_cast<int>(c), sum);
  }
}

RealVector class_function_eigenvalues(const IrrepCatalog& catalog,
                                      const ClassFunction& f) {
  const FiniteGroup& g = catalog.group();
  if (f.values.size() != g.order())
    throw DomainError("class function has the wrong length");
  RealVector l(static_cast<Eigen::Index>(catalog.size()));
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    Complex sum = 0.0;
    for (Element x = 0; x < g.order(); ++x)
      sum += catalog[k].character(x) * f.values[x];
    l(static_cast<Eigen::Index>(k)) =
        sum.real() / (static_cast<double>(g.order()) *
                      static_cast<double>(catalog[k].dim()));
  }
  return l;
}

CovariantChannel channel_from_class_function(SpacePtr space,
                                             const ClassFunction& f) {
  validate_class_function(space->group(), f);
  const RealVector all = class_function_eigenvalues(space->catalog(), f);
  const ThetaSet& theta = space->theta();
  EigenvalueVector l;
  l.labels = theta.members;
  l.values.resize(static_cast<Eigen::Index>(theta.size()));
  for (std::size_t pos = 0; pos < theta.size(); ++pos)
    l.values(static_cast<Eigen::Index>(pos)) =
        all(static_cast<Eigen::Index>(theta.catalog_index[pos]));
  try {
    return build_channel(std::move(space), std::move(l));
  } catch (const NotCompletelyPositive& e) {
    throw InternalError(std::string("class-function channel failed CP: ") +
                        e.what());
  } catch (const NotTracePreserving& e) {
    throw InternalError(std::string("class-function channel failed TP: ") +
                        e.what());
  }
}

CharacterMatrices character_matrices(const IrrepCatalog& catalog) {
  const FiniteGroup& g = catalog.group();
  CharacterMatrices out;
  for (const auto& cls : g.classes())
    out.order.insert(out.order.end(), cls.begin(), cls.end());
  const auto rows = static_cast<Eigen::Index>(g.order());
  const auto cols = static_cast<Eigen::Index>(catalog.size());
  out.t.resize(rows, cols);
  out.d = RealMatrix::Zero(cols, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    const Irrep& gamma = catalog[static_cast<std::size_t>(c)];
    out.d(c, c) = static_cast<double>(gamma.dim());
    for (Eigen::Index r = 0; r < rows; ++r)
      out.t(r, c) =
          gamma.character(g.inverse(out.order[static_cast<std::size_t>(r)]));
  }
  return out;
}

RealVector x_coefficients_matrix(const IrrepCatalog& catalog,
                                 const ClassFunction& f) {
  const FiniteGroup& g = catalog.group();
  if (f.values.size() != g.order())
    throw DomainError("class function has the wrong length");
  const CharacterMatrices cm = character_matrices(catalog);
  Vector fv(static_cast<Eigen::Index>(g.order()));
  for (std::size_t r = 0; r < cm.order.size(); ++r)
    fv(static_cast<Eigen::Index>(r)) = f.values[cm.order[r]];
  const Vector xv =
      (cm.t * (cm.t.adjoint() * fv)) / static_cast<double>(g.order());
  RealVector x(static_cast<Eigen::Index>(g.order()));
  for (std::size_t r = 0; r < cm.order.size(); ++r)
    x(static_cast<Eigen::Index>(cm.order[r])) =
        xv(static_cast<Eigen::Index>(r)).real();
  return x;
}

RealVector x_coefficients(const IrrepCatalog& catalog, const ClassFunction& f) {
  const FiniteGroup& g = catalog.group();
  if (f.values.size() != g.order())
    throw DomainError("class function has the wrong length");
  RealVector x(static_cast<Eigen::Index>(g.order()));
  double scale = 1.0;
  for (const auto& cls : g.classes()) {
    double sum = 0.0;
    for (Element h : cls) sum += f.values[h];
    const double avg = sum / static_cast<double>(cls.size());
    for (Element h : cls) x(static_cast<Eigen::Index>(h)) = avg;
    scale = std::max(scale, std::abs(avg));
  }
  const RealVector check = x_coefficients_matrix(catalog, f);
  if ((x - check).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InternalError("class-average and matrix routes for x disagree");
  return x;
}

}  // namespace covch
